"""
Domain Service for the Solid Disk.

The disk kernel below is shared by the annulus (difference of two disks with a
common surface density) and the body stack.
"""

import math

from src.elliptic.domain.services import EllipticIntegralService
from src.potential.domain.services.ring_geometry import RingGeometry
from src.potential.domain.value_objects import DiskBody, FieldPoint
from src.shared.domain.exceptions import FieldDiscontinuityError, SingularCharacteristicError

HALF_PI = 0.5 * math.pi


def planar_disk_term(radius: float, r: float) -> float:
    """
    -(c + r) E(m) - (c - r) K(m) for a point in the plate plane.

    Shared by the disk kernel at z = 0 and the planar annulus potential so
    that both produce identical values.
    """
    ring = RingGeometry.build(radius, r, 0.0)
    k_value = EllipticIntegralService.complete_k_complement(ring.m1)
    e_value = EllipticIntegralService.complete_e(ring.m)
    return -(radius + r) * e_value - (radius - r) * k_value


def planar_disk_slope(radius: float, r: float) -> float:
    """
    ((c^2 + r^2)/(c + r)) K(m) - (c + r) E(m) for a point in the plate plane, r > 0.

    Equals (c + r) * ((1 - m/2) K - E), which is how it is evaluated.
    """
    ring = RingGeometry.build(radius, r, 0.0)
    return ring.p * EllipticIntegralService.radial_combination(ring.m, ring.m1)


class DiskPotentialService:
    """
    Domain Service: potential and gradient of a homogeneous disk.

    The working formula replaces the third-kind term of the classical closed
    form by Heuman's lambda, which stays finite on the cylinder r = a.
    """

    @staticmethod
    def kernel_potential(radius: float, surface_density: float, r: float, z: float) -> float:
        """
        Potential of a disk of the given radius and G*sigma at (r, z).

        Raises:
            SingularityError: On the edge circle (r, z) = (radius, 0)
        """
        scale = 2.0 * surface_density
        if z == 0.0:
            return scale * planar_disk_term(radius, r)

        ring = RingGeometry.build(radius, r, z)
        abs_z = abs(z)
        side = ring.side
        k_value = EllipticIntegralService.complete_k_complement(ring.m1)
        e_value = EllipticIntegralService.complete_e(ring.m)
        heuman = EllipticIntegralService.heuman_combination(ring.amplitude, ring.m1)
        return scale * (
            -ring.p * e_value
            - (radius * radius - r * r) / ring.p * k_value
            + abs_z * HALF_PI * (1.0 + side)
            - abs_z * side * heuman
        )

    @staticmethod
    def kernel_gradient(radius: float, surface_density: float, r: float, z: float) -> tuple[float, float]:
        """
        (dU/dr, dU/dz) of a disk at (r, z).

        At z = 0 the vertical component is the mean of the two one-sided
        values, i.e. 0. Callers decide whether the point is on a plate.
        """
        scale = 2.0 * surface_density
        ring = RingGeometry.build(radius, r, z)
        d_r = 0.0
        if r != 0.0:
            d_r = scale / r * ring.p * EllipticIntegralService.radial_combination(ring.m, ring.m1)
        if z == 0.0:
            return d_r, 0.0

        side = ring.side
        k_value = EllipticIntegralService.complete_k_complement(ring.m1)
        heuman = EllipticIntegralService.heuman_combination(ring.amplitude, ring.m1)
        d_z = scale * (-z * k_value / ring.p + math.copysign(1.0, z) * (HALF_PI * (1.0 + side) - side * heuman))
        return d_r, d_z

    @staticmethod
    def potential(body: DiskBody, point: FieldPoint) -> float:
        """
        Potential of the disk, defined everywhere off its edge circle.

        Raises:
            SingularityError: On the edge circle
        """
        return DiskPotentialService.kernel_potential(body.a, body.surface_density, point.r, point.z)

    @staticmethod
    def potential_naive(body: DiskBody, point: FieldPoint) -> float:
        """
        Classical third-kind closed form of the disk potential.

        Kept as a cross-check for potential(); it breaks down on the cylinder
        r = a where the characteristic n^2 = 4ar/(a+r)^2 reaches 1.

        Raises:
            SingularityError: On the edge circle
            SingularCharacteristicError: If r = a and z != 0
        """
        a = body.a
        r = point.r
        z = point.z
        ring = RingGeometry.build(a, r, z)
        if r == a:
            raise SingularCharacteristicError(f"Third-kind disk formula is singular at r = a = {a!r} with z = {z!r}")

        k_value = EllipticIntegralService.complete_k_complement(ring.m1)
        e_value = EllipticIntegralService.complete_e(ring.m)
        value = abs(z) * HALF_PI * (1.0 + ring.side) - ring.p * e_value - (a * a - r * r) / ring.p * k_value
        if z != 0.0:
            n2 = 4.0 * a * r / (a + r) ** 2
            pi_value = EllipticIntegralService.complete_pi(n2, ring.m)
            value -= (a - r) / (a + r) * (z * z / ring.p) * pi_value
        return 2.0 * body.surface_density * value

    @staticmethod
    def gradient(body: DiskBody, point: FieldPoint) -> tuple[float, float, float]:
        """
        Cartesian gradient of the disk potential.

        Raises:
            FieldDiscontinuityError: On the plate (z = 0, r <= a)
        """
        r = point.r
        if point.z == 0.0 and r <= body.a:
            raise FieldDiscontinuityError(
                f"Gradient undefined on the disk plate at r = {r!r}", normal_jump=body.normal_jump
            )
        d_r, d_z = DiskPotentialService.kernel_gradient(body.a, body.surface_density, r, point.z)
        if r == 0.0:
            return 0.0, 0.0, d_z
        return d_r * point.x / r, d_r * point.y / r, d_z
