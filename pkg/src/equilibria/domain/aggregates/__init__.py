"""
src.equilibria.domain.aggregates - Equilibria Aggregates module.
"""

from .equilibrium_census_aggregate import EquilibriumCensusAggregate

__all__ = [
    "EquilibriumCensusAggregate",
]
