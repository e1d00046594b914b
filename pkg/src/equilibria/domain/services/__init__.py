"""
src.equilibria.domain.services - Equilibria Domain Services module.
"""

from .bifurcation_service import BifurcationService
from .critical_point_service import CriticalPointService
from .monodromy_service import MonodromyService
from .origin_spectrum_service import OriginSpectrumService, linearization

__all__ = [
    "BifurcationService",
    "CriticalPointService",
    "MonodromyService",
    "OriginSpectrumService",
    "linearization",
]
