"""
Shared Domain Event - Domain Event Module.
"""

import uuid

from datetime import datetime, timezone
from dataclasses import dataclass, field, fields


@dataclass(frozen=True, kw_only=True)
class DomainEvent:
    """
    Base class for all domain events.
    Immutable and carries the time it occurred (UTC) and a unique id.
    """

    event_id: str = field(default_factory=lambda: str(uuid.uuid4()))
    occurred_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))

    def event_type(self) -> str:
        """
        Returns the type of the event
        """

        return self.__class__.__name__

    def payload(self) -> dict:
        """Event fields without the id and timestamp."""
        metadata = ("event_id", "occurred_at")
        return {item.name: getattr(self, item.name) for item in fields(self) if item.name not in metadata}
