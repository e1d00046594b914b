"""
Distances from a field point to a circle of radius c centred on the z axis.
"""

import math
from dataclasses import dataclass

from src.shared.domain.exceptions import SingularityError


@dataclass(frozen=True)
class RingGeometry:
    """
    Auxiliary quantities of the closed forms for one circle of radius c.

    Attributes:
        c: Circle radius
        r: Cylindrical radius of the field point
        z: Height of the field point
        p: Largest distance sqrt((c + r)^2 + z^2)
        q2: Squared smallest distance (c - r)^2 + z^2
        m: Parameter 4 c r / p^2
        m1: Complementary parameter q^2 / p^2, computed without cancellation
    """

    c: float
    r: float
    z: float
    p: float
    q2: float
    m: float
    m1: float

    @classmethod
    def build(cls, c: float, r: float, z: float) -> "RingGeometry":
        """
        Raises:
            SingularityError: If the point lies on the circle itself
        """
        p2 = (c + r) ** 2 + z * z
        q2 = (c - r) ** 2 + z * z
        if q2 == 0.0:
            raise SingularityError(f"Field point (r={r!r}, z={z!r}) lies on the edge circle of radius {c!r}")
        return cls(c=c, r=r, z=z, p=math.sqrt(p2), q2=q2, m=min(4.0 * c * r / p2, 1.0), m1=q2 / p2)

    @property
    def q(self) -> float:
        """Smallest distance from the point to the circle."""
        return math.sqrt(self.q2)

    @property
    def amplitude(self) -> float:
        """phi = arcsin(|z| / q), taken as atan2 so that phi = pi/2 only on r = c."""
        return math.atan2(abs(self.z), abs(self.c - self.r))

    @property
    def side(self) -> float:
        """sign(c - r) with sign(0) = 0."""
        if self.r < self.c:
            return 1.0
        if self.r > self.c:
            return -1.0
        return 0.0
