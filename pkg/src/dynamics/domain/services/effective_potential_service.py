"""
Domain Service for the Effective Potential.
"""

import numpy as np

from src.dynamics.domain.value_objects import EffectivePotentialCurve
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack
from src.shared.domain.exceptions import PreconditionError
from src.shared.domain.services import FiniteDifferenceService


def _check(angular_momentum: float, r: float) -> None:
    if angular_momentum < 0.0:
        raise PreconditionError(f"Angular momentum must be non-negative, got {angular_momentum!r}")
    if r < 0.0 or (r == 0.0 and angular_momentum != 0.0):
        raise PreconditionError(f"Effective potential needs r > 0, got r = {r!r}")


class EffectivePotentialService:
    """
    Domain Service: W(r) = Lambda^2 / (2 r^2) + U(r, 0) for planar motion.

    With E = 1/2 rdot^2 + W(r) the zeros of W'(r) = -Lambda^2 / r^3 + U'(r)
    are exactly the radii of circular orbits.
    """

    @staticmethod
    def value(bodies: AnnulusBody | BodyStack, angular_momentum: float, r: float) -> float:
        """
        W(r).

        Raises:
            PreconditionError: If Lambda < 0 or r <= 0 with Lambda > 0
            SingularityError: At an edge radius
        """
        _check(angular_momentum, r)
        centrifugal = 0.0 if angular_momentum == 0.0 else angular_momentum**2 / (2.0 * r * r)
        return centrifugal + StackPotentialService.planar_potential(bodies, r)

    @staticmethod
    def slope(bodies: AnnulusBody | BodyStack, angular_momentum: float, r: float) -> float:
        """
        W'(r).

        Raises:
            PreconditionError: If Lambda < 0 or r <= 0 with Lambda > 0
            SingularityError: At an edge radius
        """
        _check(angular_momentum, r)
        centrifugal = 0.0 if angular_momentum == 0.0 else angular_momentum**2 / r**3
        return StackPotentialService.planar_derivative(bodies, r) - centrifugal

    @staticmethod
    def curvature(bodies: AnnulusBody | BodyStack, angular_momentum: float, r: float) -> float:
        """W''(r) by a Richardson central difference of W', with steps kept clear of edge radii."""
        step = 1.0e-4 * max(r, 1.0e-3)
        clearance = min(abs(r - edge) for edge in BodyStack.coerce(bodies).edge_radii)
        step = min(step, 0.25 * clearance)
        return FiniteDifferenceService.derivative(
            lambda radius: EffectivePotentialService.slope(bodies, angular_momentum, radius), r, step, 0.5 * step
        )

    @staticmethod
    def curve(bodies: AnnulusBody | BodyStack, angular_momentum: float, radii: np.ndarray) -> EffectivePotentialCurve:
        """
        Sample W and W' on a radius grid.

        Grid points on an edge radius are dropped.
        """
        edges = set(BodyStack.coerce(bodies).edge_radii)
        kept = np.array([radius for radius in np.asarray(radii, dtype=float) if radius not in edges])
        values = np.array([EffectivePotentialService.value(bodies, angular_momentum, radius) for radius in kept])
        slopes = np.array([EffectivePotentialService.slope(bodies, angular_momentum, radius) for radius in kept])
        return EffectivePotentialCurve(angular_momentum, kept, values, slopes)
