"""
Equilibria Domain Event - Critical Point Located Event
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING

from src.shared.domain.events import DomainEvent

if TYPE_CHECKING:
    from src.equilibria.domain.value_objects import EquilibriumReport


@dataclass(frozen=True)
class CriticalPointLocatedEvent(DomainEvent):
    """
    Domain Event: A critical point of the effective potential was certified.

    Emitted by: EquilibriumCensusAggregate.create()
    Consumed by: EquilibriumEventHandler (logging)
    """

    report: "EquilibriumReport"
