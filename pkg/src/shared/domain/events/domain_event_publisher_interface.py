"""
Shared Domain - Domain Event Publisher Interface.

Domain services and aggregates raise events such as located critical points,
terminated trajectories or completed commands; the command line reacts to
them only through this port.
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable

from .domain_event import DomainEvent

EventHandler = Callable[[DomainEvent], None]


class IDomainEventPublisher(ABC):
    """
    Port: routes domain events to the handlers registered for their class.

    Implementations deliver an event to the handlers of its class and of every
    base class, so a handler on DomainEvent sees the whole stream.
    """

    @abstractmethod
    def subscribe(self, event_type: type[DomainEvent], handler: EventHandler) -> None:
        """Register handler for event_type and its subclasses."""
        raise NotImplementedError

    @abstractmethod
    def publish(self, event: DomainEvent) -> None:
        """
        Deliver one event.

        A failing handler must not keep the remaining handlers from running.
        """
        raise NotImplementedError

    @abstractmethod
    def publish_all(self, events: Iterable[DomainEvent]) -> None:
        """
        Deliver events in order, e.g. the census events of an EquilibriumCensusAggregate.

        Args:
            events: Events collected by an aggregate since its last flush
        """
        raise NotImplementedError
