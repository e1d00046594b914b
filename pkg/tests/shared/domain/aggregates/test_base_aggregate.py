"""
Unit Tests for BaseAggregate.

Test categories:
- Event collection tests
- Event clearing tests
"""

from src.shared.domain.aggregates import BaseAggregate
from src.shared.domain.events import DomainEvent


class SampleEvent(DomainEvent):
    """Event used by the tests."""


class ConcreteAggregate(BaseAggregate):
    """Aggregate exposing event registration."""

    def add_event(self, event: DomainEvent):
        """Queue an event."""
        self._add_domain_event(event)


class TestBaseAggregateEvents:
    """Test collecting domain events."""

    def test_starts_empty(self):
        """A new aggregate has no pending events."""
        aggregate = ConcreteAggregate()

        assert aggregate.has_domain_events() is False
        assert not aggregate.get_domain_events()

    def test_events_keep_order(self):
        """Events are returned in the order they were added."""
        aggregate = ConcreteAggregate()
        events = [SampleEvent(), SampleEvent(), SampleEvent()]
        for event in events:
            aggregate.add_event(event)

        assert aggregate.get_domain_events() == events
        assert aggregate.has_domain_events() is True

    def test_returned_list_is_a_copy(self):
        """Mutating the returned list leaves the aggregate untouched."""
        aggregate = ConcreteAggregate()
        aggregate.add_event(SampleEvent())

        events = aggregate.get_domain_events()
        events.clear()

        assert len(aggregate.get_domain_events()) == 1

    def test_aggregates_are_independent(self):
        """Two aggregates do not share their event lists."""
        first, second = ConcreteAggregate(), ConcreteAggregate()
        first.add_event(SampleEvent())

        assert second.has_domain_events() is False


class TestBaseAggregateClear:
    """Test clearing domain events."""

    def test_clear(self):
        """Clearing removes every pending event."""
        aggregate = ConcreteAggregate()
        aggregate.add_event(SampleEvent())
        aggregate.add_event(SampleEvent())

        aggregate.clear_domain_events()

        assert aggregate.has_domain_events() is False

    def test_add_after_clear(self):
        """Events can be collected again after clearing."""
        aggregate = ConcreteAggregate()
        aggregate.add_event(SampleEvent())
        aggregate.clear_domain_events()
        event = SampleEvent()
        aggregate.add_event(event)

        assert aggregate.get_domain_events() == [event]
