"""
src.potential.domain.services - Potential Domain Services module.
"""

from .annulus_potential_service import AnnulusPotentialService
from .disk_potential_service import DiskPotentialService
from .potential_field_service import PotentialFieldService
from .quadrature_oracle_service import QuadratureOracleService
from .ring_geometry import RingGeometry
from .stack_potential_service import StackPotentialService
from .wire_potential_service import WirePotentialService

__all__ = [
    "AnnulusPotentialService",
    "DiskPotentialService",
    "PotentialFieldService",
    "QuadratureOracleService",
    "RingGeometry",
    "StackPotentialService",
    "WirePotentialService",
]
