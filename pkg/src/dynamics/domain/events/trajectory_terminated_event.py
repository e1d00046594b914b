"""
Dynamics Domain Event - Trajectory Terminated Event
"""

from dataclasses import dataclass

from src.shared.domain.enums import TerminationReason
from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class TrajectoryTerminatedEvent(DomainEvent):
    """
    Domain Event: An orbit integration stopped.

    Emitted by: OrbitCommandService after integrating
    Consumed by: TrajectoryEventHandler (logging; warns on large energy drift)

    Attributes:
        reason: Why the integration stopped
        final_time: Time of the last recorded state
        energy_drift: max |E(t) - E(0)| / |E(0)| over the recorded states
    """

    reason: TerminationReason
    final_time: float
    energy_drift: float
