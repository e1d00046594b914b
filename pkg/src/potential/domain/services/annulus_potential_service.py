"""
Domain Service for the Planar Annulus.

The annulus b <= r <= a is the disk of radius a minus the disk of radius b,
both carrying the annulus surface density G*sigma = mu / (pi (a^2 - b^2)).
"""

import math

from src.potential.domain.services.disk_potential_service import (
    DiskPotentialService,
    planar_disk_slope,
    planar_disk_term,
)
from src.potential.domain.value_objects import AnnulusBody, FieldPoint
from src.shared.domain.exceptions import FieldDiscontinuityError, PreconditionError


class AnnulusPotentialService:
    """
    Domain Service: potential, gradient and in-plane reductions of an annulus.
    """

    @staticmethod
    def potential(body: AnnulusBody, point: FieldPoint) -> float:
        """
        Potential of the annulus at a point off its edge circles.

        Raises:
            SingularityError: On either edge circle
        """
        density = body.surface_density
        r = point.r
        z = point.z
        outer = DiskPotentialService.kernel_potential(body.a, density, r, z)
        inner = DiskPotentialService.kernel_potential(body.b, density, r, z)
        return outer - inner

    @staticmethod
    def cylindrical_gradient(body: AnnulusBody, r: float, z: float) -> tuple[float, float]:
        """
        (dU/dr, dU/dz) at a point strictly off the plate.

        Raises:
            FieldDiscontinuityError: If z = 0 and b <= r <= a
        """
        if z == 0.0 and body.covers(r):
            raise FieldDiscontinuityError(
                f"Gradient undefined on the annulus plate at r = {r!r}", normal_jump=body.normal_jump
            )
        density = body.surface_density
        outer_r, outer_z = DiskPotentialService.kernel_gradient(body.a, density, r, z)
        inner_r, inner_z = DiskPotentialService.kernel_gradient(body.b, density, r, z)
        return outer_r - inner_r, outer_z - inner_z

    @staticmethod
    def gradient(body: AnnulusBody, point: FieldPoint) -> tuple[float, float, float]:
        """
        Cartesian gradient (U_x, U_y, U_z).

        Raises:
            FieldDiscontinuityError: On the plate or its edges, carrying the normal jump 4 pi G sigma
        """
        r = point.r
        d_r, d_z = AnnulusPotentialService.cylindrical_gradient(body, r, point.z)
        if r == 0.0:
            return 0.0, 0.0, d_z
        return d_r * point.x / r, d_r * point.y / r, d_z

    @staticmethod
    def planar_potential(body: AnnulusBody, r: float) -> float:
        """
        U(r) in the plate plane.

        U(r) = 2 G sigma [(b + r) E_b + (b - r) K_b - (a + r) E_a - (a - r) K_a]

        Raises:
            PreconditionError: If r < 0
            SingularityError: If r is an edge radius
        """
        if r < 0.0:
            raise PreconditionError(f"Planar radius must be non-negative, got {r!r}")
        scale = 2.0 * body.surface_density
        return scale * planar_disk_term(body.a, r) - scale * planar_disk_term(body.b, r)

    @staticmethod
    def planar_radial_derivative(body: AnnulusBody, r: float) -> float:
        """
        dU/dr in the plate plane.

        The value at r = 0 is the limit 0 (the origin is a critical point).
        Inside the plate this is the in-plane force along the plate, which is
        continuous there.

        Raises:
            PreconditionError: If r < 0
            SingularityError: If r is an edge radius (logarithmic divergence)
        """
        if r < 0.0:
            raise PreconditionError(f"Planar radius must be non-negative, got {r!r}")
        if r == 0.0:
            return 0.0
        scale = 2.0 * body.surface_density
        return scale / r * (planar_disk_slope(body.a, r) - planar_disk_slope(body.b, r))

    @staticmethod
    def axis_potential(body: AnnulusBody, z: float) -> float:
        """U(0, 0, z) = -2 mu / (sqrt(a^2 + z^2) + sqrt(b^2 + z^2))."""
        return -2.0 * body.mu / (math.hypot(body.a, z) + math.hypot(body.b, z))

    @staticmethod
    def axis_derivative(body: AnnulusBody, z: float) -> float:
        """dU/dz on the axis, 2 mu z / (A B (A + B)) with A = sqrt(a^2 + z^2), B = sqrt(b^2 + z^2)."""
        outer = math.hypot(body.a, z)
        inner = math.hypot(body.b, z)
        return 2.0 * body.mu * z / (outer * inner * (outer + inner))
