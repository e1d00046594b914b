"""
Domain Service for Field Evaluation on Any Body.
"""

import math

from src.potential.domain.services.annulus_potential_service import AnnulusPotentialService
from src.potential.domain.services.disk_potential_service import DiskPotentialService
from src.potential.domain.services.stack_potential_service import StackPotentialService
from src.potential.domain.services.wire_potential_service import WirePotentialService
from src.potential.domain.value_objects import (
    AnnulusBody,
    Body,
    BodyStack,
    DiskBody,
    FieldPoint,
    FieldSample,
    WireBody,
)
from src.shared.domain.exceptions import PreconditionError


class PotentialFieldService:
    """
    Domain Service: dispatches field evaluations to the closed form of each body type.
    """

    @staticmethod
    def potential(body: Body, point: FieldPoint) -> float:
        """
        Potential of any supported body.

        Raises:
            SingularityError: On a wire or an edge circle
        """
        if isinstance(body, WireBody):
            return WirePotentialService.potential(body, point)
        if isinstance(body, DiskBody):
            return DiskPotentialService.potential(body, point)
        if isinstance(body, AnnulusBody):
            return AnnulusPotentialService.potential(body, point)
        if isinstance(body, BodyStack):
            return StackPotentialService.potential(body, point)
        raise PreconditionError(f"Unsupported body type {type(body).__name__}")

    @staticmethod
    def gradient(body: Body, point: FieldPoint) -> tuple[float, float, float]:
        """
        Gradient of any supported body.

        Raises:
            SingularityError: On a wire
            FieldDiscontinuityError: On a plate or an edge circle
        """
        if isinstance(body, WireBody):
            return WirePotentialService.gradient(body, point)
        if isinstance(body, DiskBody):
            return DiskPotentialService.gradient(body, point)
        if isinstance(body, AnnulusBody):
            return AnnulusPotentialService.gradient(body, point)
        if isinstance(body, BodyStack):
            return StackPotentialService.gradient(body, point)
        raise PreconditionError(f"Unsupported body type {type(body).__name__}")

    @staticmethod
    def axis_potential(body: Body, z: float) -> float:
        """Closed-form U(0, 0, z) of any supported body."""
        if isinstance(body, WireBody):
            return -body.mu / math.hypot(body.a, z)
        if isinstance(body, DiskBody):
            return -2.0 * body.mu / (body.a * body.a) * (math.hypot(body.a, z) - abs(z))
        if isinstance(body, (AnnulusBody, BodyStack)):
            return StackPotentialService.axis_potential(body, z)
        raise PreconditionError(f"Unsupported body type {type(body).__name__}")

    @staticmethod
    def field_sample(body: Body, point: FieldPoint) -> FieldSample:
        """
        Potential and gradient at a point, flagging plate and edge points.

        On an edge circle (or on the wire) neither value is defined. On a
        plate the potential is returned together with the normal-derivative
        jump 4 pi G sigma of that plate, and the gradient is omitted.
        """
        r = point.r
        in_plane = point.z == 0.0
        if in_plane and r in PotentialFieldService.edge_radii(body):
            return FieldSample(potential=None, gradient=None, on_edge=True)

        potential = PotentialFieldService.potential(body, point)
        if in_plane:
            jump = PotentialFieldService.plate_jump(body, r)
            if jump is not None:
                return FieldSample(potential=potential, gradient=None, on_plate=True, normal_jump=jump)
        return FieldSample(potential=potential, gradient=PotentialFieldService.gradient(body, point))

    @staticmethod
    def edge_radii(body: Body) -> tuple[float, ...]:
        """Radii of the singular circles of a body in the plane z = 0."""
        if isinstance(body, (WireBody, DiskBody)):
            return (body.a,)
        return BodyStack.coerce(body).edge_radii

    @staticmethod
    def plate_jump(body: Body, r: float) -> float | None:
        """Normal jump of the plate containing radius r in z = 0, None off the plates."""
        if isinstance(body, WireBody):
            return None
        if isinstance(body, DiskBody):
            return body.normal_jump if r <= body.a else None
        member = BodyStack.coerce(body).member_covering(r)
        return None if member is None else member.normal_jump
