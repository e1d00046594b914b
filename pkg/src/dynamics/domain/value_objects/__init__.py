"""
src.dynamics.domain.value_objects - Dynamics Value Objects module.
"""

from .cartesian_state import CartesianState
from .effective_potential_curve import EffectivePotentialCurve
from .integration_settings import IntegrationSettings
from .level_curve import LevelCurve
from .reduced_state import ReducedState
from .trajectory import Trajectory

__all__ = [
    "CartesianState",
    "EffectivePotentialCurve",
    "IntegrationSettings",
    "LevelCurve",
    "ReducedState",
    "Trajectory",
]
