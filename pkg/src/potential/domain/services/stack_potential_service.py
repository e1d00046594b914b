"""
Domain Service for Stacks of Concentric Annuli.

The potential of a stack is additive: every operation is the sum of the
member-annulus operation, taken in member order.
"""

from src.potential.domain.services.annulus_potential_service import AnnulusPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack, FieldPoint
from src.shared.domain.exceptions import FieldDiscontinuityError


class StackPotentialService:
    """
    Domain Service: superposed potential of coplanar concentric annuli.

    Every operation accepts a single AnnulusBody as a one-member stack.
    """

    @staticmethod
    def potential(bodies: AnnulusBody | BodyStack, point: FieldPoint) -> float:
        """
        Raises:
            SingularityError: On any edge circle
        """
        stack = BodyStack.coerce(bodies)
        return sum(AnnulusPotentialService.potential(member, point) for member in stack.annuli)

    @staticmethod
    def cylindrical_gradient(bodies: AnnulusBody | BodyStack, r: float, z: float) -> tuple[float, float]:
        """
        Raises:
            FieldDiscontinuityError: On any member plate
        """
        stack = BodyStack.coerce(bodies)
        if z == 0.0:
            member = stack.member_covering(r)
            if member is not None:
                raise FieldDiscontinuityError(
                    f"Gradient undefined on the plate [{member.b}, {member.a}] at r = {r!r}",
                    normal_jump=member.normal_jump,
                )
        components = [AnnulusPotentialService.cylindrical_gradient(member, r, z) for member in stack.annuli]
        return sum(d_r for d_r, _ in components), sum(d_z for _, d_z in components)

    @staticmethod
    def gradient(bodies: AnnulusBody | BodyStack, point: FieldPoint) -> tuple[float, float, float]:
        """
        Cartesian gradient of the stack potential.

        Raises:
            FieldDiscontinuityError: On any member plate
        """
        r = point.r
        d_r, d_z = StackPotentialService.cylindrical_gradient(bodies, r, point.z)
        if r == 0.0:
            return 0.0, 0.0, d_z
        return d_r * point.x / r, d_r * point.y / r, d_z

    @staticmethod
    def planar_potential(bodies: AnnulusBody | BodyStack, r: float) -> float:
        """U(r) in the plate plane."""
        stack = BodyStack.coerce(bodies)
        return sum(AnnulusPotentialService.planar_potential(member, r) for member in stack.annuli)

    @staticmethod
    def planar_derivative(bodies: AnnulusBody | BodyStack, r: float) -> float:
        """dU/dr in the plate plane; diverges at every edge radius."""
        stack = BodyStack.coerce(bodies)
        return sum(AnnulusPotentialService.planar_radial_derivative(member, r) for member in stack.annuli)

    @staticmethod
    def axis_potential(bodies: AnnulusBody | BodyStack, z: float) -> float:
        """U(0, 0, z)."""
        stack = BodyStack.coerce(bodies)
        return sum(AnnulusPotentialService.axis_potential(member, z) for member in stack.annuli)

    @staticmethod
    def axis_derivative(bodies: AnnulusBody | BodyStack, z: float) -> float:
        """dU/dz on the axis."""
        stack = BodyStack.coerce(bodies)
        return sum(AnnulusPotentialService.axis_derivative(member, z) for member in stack.annuli)
