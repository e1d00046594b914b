"""
src.equilibria.domain.value_objects - Equilibria Value Objects module.
"""

from .bifurcation_result import BifurcationResult
from .equilibrium_report import EquilibriumReport
from .monodromy_result import EpicyclicFrequencies, MonodromyResult
from .origin_spectrum import OriginSpectrum
from .serialization import complex_record, complex_records

__all__ = [
    "BifurcationResult",
    "EpicyclicFrequencies",
    "EquilibriumReport",
    "MonodromyResult",
    "OriginSpectrum",
    "complex_record",
    "complex_records",
]
