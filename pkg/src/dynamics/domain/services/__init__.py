"""
src.dynamics.domain.services - Dynamics Domain Services module.
"""

from .axial_motion_service import AxialMotionService
from .circular_orbit_service import CircularOrbitService
from .effective_potential_service import EffectivePotentialService
from .equations_of_motion_service import EquationsOfMotionService
from .phase_portrait_service import PhasePortraitService
from .trajectory_integration_service import TrajectoryIntegrationService

__all__ = [
    "AxialMotionService",
    "CircularOrbitService",
    "EffectivePotentialService",
    "EquationsOfMotionService",
    "PhasePortraitService",
    "TrajectoryIntegrationService",
]
