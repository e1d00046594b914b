"""
Equilibria Domain Event - Bifurcation Located Event
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING

from src.shared.domain.events import DomainEvent

if TYPE_CHECKING:
    from src.equilibria.domain.value_objects import BifurcationResult


@dataclass(frozen=True)
class BifurcationLocatedEvent(DomainEvent):
    """
    Domain Event: The angular momentum where exterior circular orbits appear was bracketed.

    Emitted by: BifurcationCommandService
    Consumed by: EquilibriumEventHandler (logging)
    """

    result: "BifurcationResult"
