"""
Shared Domain Aggregate - Base Aggregate Module.
"""

from src.shared.domain.events import DomainEvent


class BaseAggregate:
    """
    Base Aggregate Root: collects domain events until an application service publishes them.
    """

    def __init__(self):
        self._domain_events: list[DomainEvent] = []

    def _add_domain_event(self, event: DomainEvent):
        """
        Queue a domain event for publication.

        Args:
            event: Domain event to add to the event list.
        """
        self._domain_events.append(event)

    def get_domain_events(self) -> list[DomainEvent]:
        """
        Return collected domain events in emission order.

        Returns:
            list[DomainEvent]: Copy of the pending events.
        """
        return self._domain_events.copy()

    def clear_domain_events(self):
        """
        Forget pending events once they were handed to the event bus.
        """
        self._domain_events.clear()

    def has_domain_events(self) -> bool:
        """True if events are waiting to be published."""
        return len(self._domain_events) > 0
