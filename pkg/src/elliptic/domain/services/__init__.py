"""
src.elliptic.domain.services - Elliptic Domain Services module.
"""

from .elliptic_integral_service import EllipticIntegralService

__all__ = [
    "EllipticIntegralService",
]
