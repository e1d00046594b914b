"""
Domain Service for the Circular-Orbit Bifurcation in Lambda.
"""

import math

from src.equilibria.domain.services.critical_point_service import CriticalPointService
from src.equilibria.domain.value_objects import BifurcationResult
from src.potential.domain.value_objects import AnnulusBody, BodyStack, DiskBody
from src.shared.domain.constants import BifurcationSettings
from src.shared.domain.enums import Region
from src.shared.domain.exceptions import BracketError, PreconditionError
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


class BifurcationService:
    """
    Domain Service: the angular momentum below which no exterior circular orbit exists.

    Above the threshold a stable and an unstable circular orbit appear together
    in the exterior region (saddle-node pair).
    """

    @staticmethod
    def sufficient_lambda(body: AnnulusBody | DiskBody) -> float:
        """
        Analytic sufficient bound sqrt(8 mu a^3 / (pi (a^2 - b^2))).

        A disk is the b = 0 limit.

        Raises:
            PreconditionError: For stacks and other body types
        """
        if isinstance(body, AnnulusBody):
            inner = body.b
        elif isinstance(body, DiskBody):
            inner = 0.0
        else:
            raise PreconditionError("The sufficient bound is defined for a single annulus or disk")
        return math.sqrt(8.0 * body.mu * body.a**3 / (math.pi * (body.a**2 - inner**2)))

    @staticmethod
    def exterior_count(bodies: AnnulusBody | BodyStack, angular_momentum: float, r_max: float | None = None) -> int:
        """Number of critical points of W beyond the outermost plate."""
        reports = CriticalPointService.find_planar_critical_points(
            bodies, angular_momentum, r_max, regions=(Region.EXTERIOR,)
        )
        return len(reports)

    @staticmethod
    def bifurcation_lambda(
        bodies: AnnulusBody | BodyStack,
        bracket: tuple[float, float],
        tolerance: float = BifurcationSettings.DEFAULT_TOLERANCE,
    ) -> BifurcationResult:
        """
        Bisection on the exterior count to a bracket of width <= tolerance.

        The scan radius is fixed from the upper end of the bracket so that the
        count is taken over the same region at every step.

        Raises:
            BracketError: If the bracket is not increasing or both ends have the same count
        """
        low, high = (float(bound) for bound in bracket)
        if not 0.0 <= low < high:
            raise BracketError(f"Bifurcation bracket must satisfy 0 <= low < high, got {bracket!r}")
        if tolerance <= 0.0:
            raise PreconditionError("Bifurcation tolerance must be positive")

        stack = BodyStack.coerce(bodies)
        r_max = CriticalPointService.default_scan_radius(stack, high)
        low_count = BifurcationService.exterior_count(stack, low, r_max)
        high_count = BifurcationService.exterior_count(stack, high, r_max)
        if low_count == high_count:
            raise BracketError(
                f"Exterior critical point count is {low_count} at both ends of the bracket ({low!r}, {high!r})"
            )

        iterations = 0
        while high - low > tolerance and iterations < BifurcationSettings.MAX_ITERATIONS:
            middle = 0.5 * (low + high)
            count = BifurcationService.exterior_count(stack, middle, r_max)
            if count == low_count:
                low = middle
            else:
                high, high_count = middle, count
            iterations += 1
            logger.debug("Bisection step %d: bracket (%r, %r)", iterations, low, high)

        sufficient = BifurcationService.sufficient_lambda(stack.annuli[0]) if len(stack.annuli) == 1 else None
        result = BifurcationResult(
            lambda_star=0.5 * (low + high),
            bracket=(low, high),
            lambda_sufficient=sufficient,
            low_count=low_count,
            high_count=high_count,
            iterations=iterations,
        )
        if result.within_sufficient_bound is False:
            logger.warning(
                "Located bifurcation %r exceeds the sufficient bound %r", result.lambda_star, result.lambda_sufficient
            )
        logger.info("Bifurcation located at Lambda=%r after %d steps", result.lambda_star, iterations)
        return result
