"""
Shared Infrastructure - In-Memory Event Bus Implementation.
"""

from collections.abc import Callable, Iterable

from src.shared.infrastructure.logging_config import get_logger
from src.shared.domain.events import DomainEvent, IDomainEventPublisher

logger = get_logger(__name__)

Handler = Callable[[DomainEvent], None]


def _handler_name(handler: Handler) -> str:
    return getattr(handler, "__qualname__", None) or repr(handler)


class InMemoryEventBus(IDomainEventPublisher):
    """
    Synchronous in-process event bus.

    Handlers run in subscription order on the publishing thread. A handler
    subscribed to a base class also receives every subclass event, so a
    subscription to DomainEvent sees everything. A failing handler is logged
    and does not stop the remaining handlers or the command.
    """

    def __init__(self):
        self._subscribers: dict[type[DomainEvent], list[Handler]] = {}

    def subscribe(self, event_type: type[DomainEvent], handler: Handler) -> None:
        """
        Subscribe a handler to an event type (and its subclasses).

        Subscribing the same handler twice has no effect.
        """
        handlers = self._subscribers.setdefault(event_type, [])
        if handler not in handlers:
            handlers.append(handler)
            logger.debug("Subscribed %s to %s", _handler_name(handler), event_type.__name__)

    def handlers_for(self, event_type: type[DomainEvent]) -> list[Handler]:
        """Handlers that receive events of the given type, in subscription order."""
        matched: list[Handler] = []
        for subscribed_type, handlers in self._subscribers.items():
            if issubclass(event_type, subscribed_type):
                matched.extend(handler for handler in handlers if handler not in matched)
        return matched

    def publish(self, event: DomainEvent) -> None:
        """
        Deliver an event to every matching handler.

        Args:
            event: The domain event that occurred.
        """
        handlers = self.handlers_for(type(event))
        if not handlers:
            logger.debug("No subscribers for %s", event.event_type())
            return

        logger.debug("Publishing %s to %d handler(s)", event.event_type(), len(handlers))
        for handler in handlers:
            try:
                handler(event)
            except Exception as error:
                logger.error(
                    "Handler %s failed on %s: %s", _handler_name(handler), event.event_type(), error, exc_info=True
                )

    def publish_all(self, events: Iterable[DomainEvent]) -> None:
        """Publish several events in order."""
        for event in events:
            self.publish(event)
