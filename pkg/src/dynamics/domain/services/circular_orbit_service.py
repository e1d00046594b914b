"""
Domain Service for Equatorial Circular Orbits.
"""

import math

from src.dynamics.domain.value_objects import CartesianState
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack
from src.shared.domain.exceptions import PreconditionError


class CircularOrbitService:
    """
    Domain Service: circular orbits r = r0 in z = 0, where U'(r0) = Lambda^2 / r0^3.
    """

    @staticmethod
    def angular_momentum(bodies: AnnulusBody | BodyStack, r0: float) -> float:
        """
        Lambda = sqrt(r0^3 U'(r0)).

        Raises:
            PreconditionError: If r0 is on a plate or U'(r0) < 0 (no circular orbit)
        """
        stack = BodyStack.coerce(bodies)
        if r0 <= 0.0 or stack.member_covering(r0) is not None:
            raise PreconditionError(f"Circular orbits need an off-plate radius r0 > 0, got {r0!r}")
        slope = StackPotentialService.planar_derivative(stack, r0)
        if slope < 0.0:
            raise PreconditionError(f"U'({r0!r}) = {slope!r} < 0: no circular orbit at this radius")
        return math.sqrt(r0**3 * slope)

    @staticmethod
    def state(bodies: AnnulusBody | BodyStack, r0: float) -> tuple[float, CartesianState]:
        """Lambda and the Cartesian state (r0, 0, 0, 0, Lambda / r0, 0) of the circular orbit."""
        angular_momentum = CircularOrbitService.angular_momentum(bodies, r0)
        return angular_momentum, CartesianState(r0, 0.0, 0.0, 0.0, angular_momentum / r0, 0.0)

    @staticmethod
    def period(r0: float, angular_momentum: float) -> float:
        """T = 2 pi r0^2 / Lambda."""
        if angular_momentum <= 0.0:
            raise PreconditionError("A circular orbit period needs Lambda > 0")
        return 2.0 * math.pi * r0 * r0 / angular_momentum

    @staticmethod
    def circularity_residual(bodies: AnnulusBody | BodyStack, r0: float, angular_momentum: float) -> float:
        """|U'(r0) - Lambda^2 / r0^3|."""
        return abs(StackPotentialService.planar_derivative(bodies, r0) - angular_momentum**2 / r0**3)
