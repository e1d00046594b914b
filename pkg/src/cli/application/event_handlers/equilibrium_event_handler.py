"""
CLI Application Event Handler - Equilibria events.
"""

from src.equilibria.domain.events import (
    BifurcationLocatedEvent,
    CriticalPointLocatedEvent,
    GapParityViolatedEvent,
)
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


class EquilibriumEventHandler:
    """
    Handler for critical-point, gap-parity and bifurcation events.
    """

    @staticmethod
    def handle_critical_point(event: CriticalPointLocatedEvent) -> None:
        """
        Handle critical point located event.

        Args:
            event: The CriticalPointLocatedEvent instance.
        """
        report = event.report
        logger.info(
            "[EVENT] Critical point: r0=%r | %s | %s | W''=%.6e | residual=%.1e",
            report.r0,
            report.region.value,
            report.kind.value,
            report.curvature,
            report.residual,
        )

    @staticmethod
    def handle_gap_parity(event: GapParityViolatedEvent) -> None:
        """
        Handle gap parity violated event.

        Args:
            event: The GapParityViolatedEvent instance.
        """
        logger.warning(
            "[EVENT] GAP PARITY VIOLATED: gap (%r, %r) holds %d critical points at Lambda=%r",
            event.gap[0],
            event.gap[1],
            event.count,
            event.angular_momentum,
        )

    @staticmethod
    def handle_bifurcation(event: BifurcationLocatedEvent) -> None:
        """
        Handle bifurcation located event.

        Args:
            event: The BifurcationLocatedEvent instance.
        """
        result = event.result
        logger.info(
            "[EVENT] Bifurcation: Lambda*=%r | bracket width %.1e | sufficient bound %s",
            result.lambda_star,
            result.width,
            result.lambda_sufficient,
        )
