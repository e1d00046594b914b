"""
Domain Service for the Linearization at the Origin.
"""

import numpy as np

from src.equilibria.domain.value_objects import OriginSpectrum
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack, FieldPoint
from src.shared.domain.services import FiniteDifferenceService


def linearization(hessian: np.ndarray) -> np.ndarray:
    """[[0, I], [-H, 0]] for x'' = -H x."""
    size = hessian.shape[0]
    return np.block([[np.zeros((size, size)), np.eye(size)], [-hessian, np.zeros((size, size))]])


class OriginSpectrumService:
    """
    Domain Service: spectral stability of the equilibrium at the centre of the hole.
    """

    @staticmethod
    def hessian(bodies: AnnulusBody | BodyStack) -> np.ndarray:
        """
        Hessian of U at the origin from Richardson differences of the closed-form gradient.

        The steps are scaled to the hole so that no stencil point touches a plate.
        """
        stack = BodyStack.coerce(bodies)
        scale = min(1.0, stack.inner_radius)
        return FiniteDifferenceService.hessian_from_gradient(
            lambda point: np.array(StackPotentialService.gradient(stack, FieldPoint(*point))),
            np.zeros(3),
            1.0e-4 * scale,
            5.0e-5 * scale,
        )

    @staticmethod
    def origin_spectrum(bodies: AnnulusBody | BodyStack) -> OriginSpectrum:
        """
        Six eigenvalues of the linearized motion at the origin.

        For a single annulus U_zz = 2 mu / (a b (a + b)) and U_xx = U_yy = -U_zz / 2,
        so the in-plane pair is real and the axial pair imaginary.

        Raises:
            PreconditionError: If the bodies are not an annulus or a stack
        """
        hessian = OriginSpectrumService.hessian(bodies)
        eigenvalues = np.linalg.eigvals(linearization(hessian))
        ordered = sorted((complex(value) for value in eigenvalues), key=lambda value: (value.real, value.imag))
        diagonal = (float(hessian[0, 0]), float(hessian[1, 1]), float(hessian[2, 2]))
        return OriginSpectrum(hessian_diagonal=diagonal, eigenvalues=tuple(ordered))
