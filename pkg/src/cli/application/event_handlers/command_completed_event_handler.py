"""
CLI Application Event Handler - Command Completed.
"""

from src.shared.domain.events import CommandCompletedEvent
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


class CommandCompletedEventHandler:
    """
    Handler for CommandCompletedEvent.
    """

    @staticmethod
    def handle(event: CommandCompletedEvent) -> None:
        """
        Handle command completed event.

        Args:
            event: The CommandCompletedEvent instance.
        """
        logger.debug("[EVENT] %s at %s: %s", event.event_type(), event.occurred_at.isoformat(), event.payload())
        logger.info("[EVENT] Command %s wrote %d file(s)", event.command, len(event.outputs))
        for output in event.outputs:
            logger.debug("  %s", output)
