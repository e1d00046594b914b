"""
Equilibria Domain Event - Gap Parity Violated Event
"""

from dataclasses import dataclass

from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class GapParityViolatedEvent(DomainEvent):
    """
    Domain Event: A gap between two plates holds an even number of critical points.

    W' tends to +inf at the inner rim of a gap and to -inf at its outer rim, so
    the count is odd unless a root was missed or a double root sits in the gap.

    Emitted by: EquilibriumCensusAggregate.create()
    Consumed by: EquilibriumEventHandler (warning)
    """

    gap: tuple[float, float]
    count: int
    angular_momentum: float
