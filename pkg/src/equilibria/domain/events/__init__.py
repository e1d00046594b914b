"""
src.equilibria.domain.events - Equilibria Domain Events module.
"""

from .bifurcation_located_event import BifurcationLocatedEvent
from .critical_point_located_event import CriticalPointLocatedEvent
from .gap_parity_violated_event import GapParityViolatedEvent

__all__ = [
    "BifurcationLocatedEvent",
    "CriticalPointLocatedEvent",
    "GapParityViolatedEvent",
]
