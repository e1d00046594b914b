"""
src.shared.domain.services - Shared Domain Services package.
"""

from .finite_difference_service import FiniteDifferenceService

__all__ = [
    "FiniteDifferenceService",
]
