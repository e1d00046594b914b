"""
src.dynamics.domain.events - Dynamics Domain Events module.
"""

from .trajectory_terminated_event import TrajectoryTerminatedEvent

__all__ = [
    "TrajectoryTerminatedEvent",
]
