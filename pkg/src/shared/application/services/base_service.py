"""
Shared Application Base Service
"""

from src.shared.domain.events import DomainEvent, IDomainEventPublisher
from src.shared.domain.aggregates import BaseAggregate


class BaseService:
    """
    Base Service class for Application Services.

    Holds the repository that receives the command's results and the optional
    event bus; without a bus, events are dropped silently.
    """

    def __init__(self, repository, event_bus: IDomainEventPublisher | None = None):
        self._repository = repository
        self._event_bus = event_bus

    @property
    def repository(self):
        """Get the repository instance."""
        return self._repository

    @property
    def event_bus(self) -> IDomainEventPublisher | None:
        """Get the event bus instance."""
        return self._event_bus

    def publish(self, event: DomainEvent):
        """
        Publish a single event that no aggregate collected.

        Args:
            event: Domain event to publish
        """
        if self._event_bus is not None:
            self._event_bus.publish(event)

    def publish_events(self, aggregate: BaseAggregate):
        """
        Publish and clear all pending events of an aggregate.

        Args:
            aggregate: Aggregate with events to publish
        """
        if self._event_bus is None:
            aggregate.clear_domain_events()
            return

        self._event_bus.publish_all(aggregate.get_domain_events())
        aggregate.clear_domain_events()
