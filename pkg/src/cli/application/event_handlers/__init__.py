"""
src.cli.application.event_handlers - CLI Event Handlers module.
"""

from .command_completed_event_handler import CommandCompletedEventHandler
from .equilibrium_event_handler import EquilibriumEventHandler
from .trajectory_event_handler import TrajectoryEventHandler

__all__ = [
    "CommandCompletedEventHandler",
    "EquilibriumEventHandler",
    "TrajectoryEventHandler",
]
