"""
CLI Application Event Handler - Trajectory Terminated.
"""

from src.dynamics.domain.events import TrajectoryTerminatedEvent
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)

ENERGY_DRIFT_WARNING = 1.0e-8


class TrajectoryEventHandler:
    """
    Handler for TrajectoryTerminatedEvent.
    """

    @staticmethod
    def handle(event: TrajectoryTerminatedEvent) -> None:
        """
        Handle trajectory terminated event; large energy drift is reported as a warning.

        Args:
            event: The TrajectoryTerminatedEvent instance.
        """
        logger.info(
            "[EVENT] Trajectory terminated: %s at t=%r | energy drift %.2e",
            event.reason.value,
            event.final_time,
            event.energy_drift,
        )
        if event.energy_drift > ENERGY_DRIFT_WARNING:
            logger.warning("Energy drift %.2e exceeds %.0e", event.energy_drift, ENERGY_DRIFT_WARNING)
