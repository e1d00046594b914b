"""
Domain Service for the Circular Wire.
"""

import math

from src.elliptic.domain.services import EllipticIntegralService
from src.potential.domain.services.ring_geometry import RingGeometry
from src.potential.domain.value_objects import FieldPoint, WireBody


class WirePotentialService:
    """
    Domain Service: potential and field of a homogeneous ring.

    U = -(2 mu / (pi p)) K(m) with m = 4 a r / p^2, evaluated in the meridian
    plane through the point (the field is axially symmetric).
    """

    @staticmethod
    def potential(body: WireBody, point: FieldPoint) -> float:
        """
        Potential of the ring at a point.

        Raises:
            SingularityError: If the point lies on the wire
        """
        ring = RingGeometry.build(body.a, point.r, point.z)
        k_value = EllipticIntegralService.complete_k_complement(ring.m1)
        return -2.0 * body.mu * k_value / (math.pi * ring.p)

    @staticmethod
    def cylindrical_gradient(body: WireBody, r: float, z: float) -> tuple[float, float]:
        """
        (dU/dr, dU/dz) of the ring.

        The radial component is written with (1 - m/2)K - E so it vanishes
        smoothly on the axis instead of cancelling.
        """
        ring = RingGeometry.build(body.a, r, z)
        a = body.a
        k_value = EllipticIntegralService.complete_k_complement(ring.m1)
        e_value = EllipticIntegralService.complete_e(ring.m)
        scale = body.mu / (math.pi * ring.p * ring.q2)

        d_z = 2.0 * scale * z * e_value
        if r == 0.0:
            return 0.0, d_z

        p2 = ring.p * ring.p
        radial = EllipticIntegralService.radial_combination(ring.m, ring.m1)
        d_r = scale / r * (2.0 * r * r * (r * r + z * z - a * a) * k_value / p2 + (a * a - r * r + z * z) * radial)
        return d_r, d_z

    @staticmethod
    def gradient(body: WireBody, point: FieldPoint) -> tuple[float, float, float]:
        """
        Cartesian gradient (U_x, U_y, U_z) of the ring.

        Raises:
            SingularityError: If the point lies on the wire
        """
        r = point.r
        d_r, d_z = WirePotentialService.cylindrical_gradient(body, r, point.z)
        if r == 0.0:
            return 0.0, 0.0, d_z
        return d_r * point.x / r, d_r * point.y / r, d_z
