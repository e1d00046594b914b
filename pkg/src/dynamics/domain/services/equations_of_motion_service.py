"""
Domain Service for the Equations of Motion.

Cartesian form:  x'' = -U_x, y'' = -U_y, z'' = -U_z
Reduced form:    r'' = -U_r + Lambda^2 / r^3, z'' = -U_z
"""

import math

import numpy as np

from src.dynamics.domain.value_objects import CartesianState, ReducedState
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack, FieldPoint
from src.shared.domain.exceptions import NumericalDomainError


def cylindrical_force(stack: BodyStack, r: float, z: float) -> tuple[float, float]:
    """
    (dU/dr, dU/dz) used inside the integrator.

    In the plane z = 0 the in-plane component is the continuous planar slope
    and the vertical component is its symmetric value 0, so trial stages that
    land exactly on z = 0 never fail; plate crossings are handled by events.
    """
    if z == 0.0:
        return StackPotentialService.planar_derivative(stack, r), 0.0
    return StackPotentialService.cylindrical_gradient(stack, r, z)


class EquationsOfMotionService:
    """
    Domain Service: right-hand sides and first integrals of the test-particle motion.
    """

    @staticmethod
    def cartesian_rhs(bodies: AnnulusBody | BodyStack, state: CartesianState) -> np.ndarray:
        """
        (vx, vy, vz, -U_x, -U_y, -U_z).

        Raises:
            FieldDiscontinuityError: If the position lies on a plate
        """
        gradient = StackPotentialService.gradient(bodies, state.position)
        return np.array([state.vx, state.vy, state.vz, -gradient[0], -gradient[1], -gradient[2]])

    @staticmethod
    def reduced_rhs(bodies: AnnulusBody | BodyStack, state: ReducedState) -> np.ndarray:
        """
        (rdot, -U_r + Lambda^2 / r^3, zdot, -U_z).

        Raises:
            FieldDiscontinuityError: If the position lies on a plate
        """
        d_r, d_z = StackPotentialService.cylindrical_gradient(bodies, state.r, state.z)
        centrifugal = state.angular_momentum**2 / state.r**3
        return np.array([state.rdot, -d_r + centrifugal, state.zdot, -d_z])

    @staticmethod
    def axis_accel(bodies: AnnulusBody | BodyStack, z: float) -> float:
        """
        Acceleration along the symmetry axis, -(2 mu z / (a^2 - b^2)) (1/sqrt(z^2 + b^2) - 1/sqrt(z^2 + a^2)).

        Odd in z and restoring. The axis never meets a plate because b > 0.
        """
        if not math.isfinite(z):
            raise NumericalDomainError(f"Axis height must be finite, got {z!r}")
        return -StackPotentialService.axis_derivative(bodies, z)

    @staticmethod
    def energy(bodies: AnnulusBody | BodyStack, state: CartesianState) -> float:
        """E = 1/2 |v|^2 + U."""
        return state.kinetic_energy + StackPotentialService.potential(bodies, state.position)

    @staticmethod
    def reduced_energy(bodies: AnnulusBody | BodyStack, state: ReducedState) -> float:
        """E = 1/2 (rdot^2 + Lambda^2 / r^2 + zdot^2) + U(r, z)."""
        kinetic = 0.5 * (state.rdot**2 + state.angular_momentum**2 / state.r**2 + state.zdot**2)
        return kinetic + StackPotentialService.potential(bodies, FieldPoint.cylindrical(state.r, state.z))
