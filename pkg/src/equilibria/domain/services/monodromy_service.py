"""
Domain Service for the Monodromy of Equatorial Circular Orbits.

In the frame co-rotating with the orbit the Hessian of U is constant, so the
variational flow is linear with constant coefficients. The monodromy matrix is
the matrix exponential of that generator over one period, mapped back to the
inertial frame; it is never integrated step by step, which keeps the
(lambda, 1/lambda) pairing of strongly unstable orbits intact.
"""

import numpy as np
from scipy import linalg

from src.dynamics.domain.services import CircularOrbitService, EffectivePotentialService
from src.equilibria.domain.value_objects import EpicyclicFrequencies, MonodromyResult
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack, FieldPoint
from src.shared.domain.constants import StabilitySettings
from src.shared.domain.enums import StabilityVerdict
from src.shared.domain.exceptions import PreconditionError
from src.shared.domain.services import FiniteDifferenceService
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)

# Generator of rotations about the z axis.
ROTATION_GENERATOR = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


def _check_circular(stack: BodyStack, r0: float, angular_momentum: float) -> None:
    if angular_momentum <= 0.0 or r0 <= 0.0:
        raise PreconditionError("Circular orbits need r0 > 0 and Lambda > 0")
    if stack.member_covering(r0) is not None:
        raise PreconditionError(f"r0 = {r0!r} lies on a plate")
    residual = CircularOrbitService.circularity_residual(stack, r0, angular_momentum)
    if residual > StabilitySettings.CIRCULARITY_TOLERANCE:
        raise PreconditionError(f"(r0, Lambda) is not circular: |U'(r0) - Lambda^2/r0^3| = {residual:.3e}")


def rotating_generator(hessian: np.ndarray, rate: float) -> np.ndarray:
    """
    Constant generator of the variational flow in the co-rotating frame.

    xi'' = -(H + rate^2 J^2) xi - 2 rate J xi' with J the rotation generator.
    """
    identity = np.eye(3)
    stiffness = hessian + rate**2 * ROTATION_GENERATOR @ ROTATION_GENERATOR
    return np.block([[np.zeros((3, 3)), identity], [-stiffness, -2.0 * rate * ROTATION_GENERATOR]])


def frame_change(rate: float) -> np.ndarray:
    """Map (xi, xi') to inertial (dx, dx') at phase 0 and at every full turn."""
    identity = np.eye(3)
    return np.block([[identity, np.zeros((3, 3))], [rate * ROTATION_GENERATOR, identity]])


class MonodromyService:
    """
    Domain Service: Floquet stability of the circular orbit r = r0, z = 0.
    """

    @staticmethod
    def orbit_hessian(bodies: AnnulusBody | BodyStack, r0: float, angular_momentum: float) -> np.ndarray:
        """
        Hessian of U at (r0, 0, 0) from Richardson differences of the gradient.

        The tangential entry U'(r0)/r0 equals Lambda^2/r0^4 on a circular orbit
        and is set to that value, which keeps the phase direction an exactly
        periodic solution of the variational flow.
        """
        stack = BodyStack.coerce(bodies)
        hessian = FiniteDifferenceService.hessian_from_gradient(
            lambda point: np.array(StackPotentialService.gradient(stack, FieldPoint(*point))),
            np.array([r0, 0.0, 0.0]),
        )
        hessian[1, 1] = angular_momentum**2 / r0**4
        return hessian

    @staticmethod
    def epicyclic_frequencies(
        bodies: AnnulusBody | BodyStack, r0: float, angular_momentum: float
    ) -> EpicyclicFrequencies:
        """kappa^2 = W''(r0) and nu^2 = U_zz(r0, 0)."""
        stack = BodyStack.coerce(bodies)
        kappa_squared = EffectivePotentialService.curvature(stack, angular_momentum, r0)
        nu_squared = FiniteDifferenceService.derivative(
            lambda z: StackPotentialService.cylindrical_gradient(stack, r0, z)[1], 0.0
        )
        return EpicyclicFrequencies(kappa_squared=kappa_squared, nu_squared=nu_squared)

    @staticmethod
    def monodromy_matrix(bodies: AnnulusBody | BodyStack, r0: float, angular_momentum: float) -> np.ndarray:
        """
        Inertial-frame monodromy matrix over T = 2 pi r0^2 / Lambda.

        Raises:
            PreconditionError: If (r0, Lambda) misses the circularity condition by more than 1e-10
        """
        stack = BodyStack.coerce(bodies)
        _check_circular(stack, r0, angular_momentum)
        rate = angular_momentum / r0**2
        generator = rotating_generator(MonodromyService.orbit_hessian(stack, r0, angular_momentum), rate)
        frame = frame_change(rate)
        period = CircularOrbitService.period(r0, angular_momentum)
        return frame @ linalg.expm(generator * period) @ np.linalg.inv(frame)

    @staticmethod
    def circular_orbit_monodromy(
        bodies: AnnulusBody | BodyStack, r0: float, angular_momentum: float
    ) -> MonodromyResult:
        """
        Monodromy eigenvalues of the circular orbit over T = 2 pi r0^2 / Lambda.

        The eigenvalues are exp(mu T) for the eigenvalues mu of the co-rotating
        generator, so reciprocal pairs stay exact even when |lambda| is huge. The
        two eigenvalues closest to 1 belong to the time-shift and orbit-family
        directions (a Jordan block); the verdict is taken over the other four.

        Raises:
            PreconditionError: If (r0, Lambda) misses the circularity condition by more than 1e-10
        """
        stack = BodyStack.coerce(bodies)
        _check_circular(stack, r0, angular_momentum)

        rate = angular_momentum / r0**2
        period = CircularOrbitService.period(r0, angular_momentum)
        hessian = MonodromyService.orbit_hessian(stack, r0, angular_momentum)
        exponents = np.linalg.eigvals(rotating_generator(hessian, rate))
        eigenvalues = sorted(
            (complex(value) for value in np.exp(exponents * period)), key=lambda value: (value.real, value.imag)
        )
        trivial = tuple(sorted(eigenvalues, key=lambda value: abs(value - 1.0))[:2])
        remaining = list(eigenvalues)
        for value in trivial:
            remaining.remove(value)
        on_circle = all(
            abs(abs(value) - 1.0) <= StabilitySettings.UNIT_CIRCLE_TOLERANCE for value in remaining
        )
        verdict = StabilityVerdict.SPECTRALLY_STABLE if on_circle else StabilityVerdict.SPECTRALLY_UNSTABLE

        result = MonodromyResult(
            r0=r0,
            angular_momentum=angular_momentum,
            period=period,
            eigenvalues=tuple(eigenvalues),
            trivial_pair=trivial,
            verdict=verdict,
            # Liouville: det exp(A T) = exp(T tr A).
            determinant=float(np.exp(np.sum(exponents).real * period)),
            frequencies=MonodromyService.epicyclic_frequencies(stack, r0, angular_momentum),
        )
        logger.info(
            "Monodromy at r0=%r, Lambda=%r: %s (trivial pair within %.2e of 1)",
            r0,
            angular_momentum,
            verdict.value,
            result.trivial_distance,
        )
        return result
