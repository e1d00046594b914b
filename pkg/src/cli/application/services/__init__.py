"""
src.cli.application.services - CLI Application Services module.
"""

from .command_service import CommandService
from .bifurcation_command_service import BifurcationCommandService
from .equilibria_command_service import EquilibriaCommandService
from .eval_command_service import EvalCommandService
from .orbit_command_service import OrbitCommandService
from .portrait_command_service import PortraitCommandService
from .run_config_service import RunConfigService

__all__ = [
    "BifurcationCommandService",
    "CommandService",
    "EquilibriaCommandService",
    "EvalCommandService",
    "OrbitCommandService",
    "PortraitCommandService",
    "RunConfigService",
]
