"""
Potential Domain Value Object - FieldPoint.
"""

import math
from dataclasses import dataclass

from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True)
class FieldPoint:
    """
    Value Object: Cartesian point at which a field is evaluated.

    The plates lie in z = 0 centred on the origin; r is the cylindrical radius
    and R the distance to the origin.
    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            if not math.isfinite(getattr(self, name)):
                raise NumericalDomainError(f"Field point coordinate {name} must be finite")

    @classmethod
    def cylindrical(cls, r: float, z: float) -> "FieldPoint":
        """Point at radius r in the meridian plane y = 0."""
        return cls(float(r), 0.0, float(z))

    @property
    def r(self) -> float:
        """Cylindrical radius sqrt(x^2 + y^2)."""
        return math.hypot(self.x, self.y)

    @property
    def big_r(self) -> float:
        """Distance to the origin sqrt(x^2 + y^2 + z^2)."""
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
