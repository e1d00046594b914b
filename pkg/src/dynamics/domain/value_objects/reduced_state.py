"""
Dynamics Domain Value Object - ReducedState.
"""

import math
from dataclasses import dataclass

import numpy as np

from src.dynamics.domain.value_objects.cartesian_state import CartesianState
from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True)
class ReducedState:
    """
    Value Object: meridian-plane state (r, rdot, z, zdot) at fixed angular momentum.

    The azimuth is cyclic, so Lambda = r^2 * dlambda/dt is a constant of the
    motion and the reduced equations only carry (r, z).

    Business Rules:
    - r > 0
    - all components finite
    """

    r: float
    rdot: float
    z: float
    zdot: float
    angular_momentum: float

    def __post_init__(self):
        values = (self.r, self.rdot, self.z, self.zdot, self.angular_momentum)
        if not all(math.isfinite(value) for value in values):
            raise NumericalDomainError(f"Reduced state must be finite, got {values}")
        if self.r <= 0.0:
            raise NumericalDomainError(f"Reduced state requires r > 0, got r = {self.r!r}")

    @classmethod
    def from_cartesian(cls, state: CartesianState) -> "ReducedState":
        """Project a Cartesian state onto its meridian plane."""
        r = math.hypot(state.x, state.y)
        if r == 0.0:
            raise NumericalDomainError("A state on the symmetry axis has no reduced form")
        rdot = (state.x * state.vx + state.y * state.vy) / r
        return cls(r, rdot, state.z, state.vz, state.angular_momentum)

    def to_cartesian(self) -> CartesianState:
        """Equivalent Cartesian state in the meridian plane y = 0, x = r."""
        return CartesianState(self.r, 0.0, self.z, self.rdot, self.angular_momentum / self.r, self.zdot)

    def as_array(self) -> np.ndarray:
        """Integration vector (r, rdot, z, zdot)."""
        return np.array([self.r, self.rdot, self.z, self.zdot], dtype=float)

    @property
    def is_planar(self) -> bool:
        """True when the motion stays in z = 0."""
        return self.z == 0.0 and self.zdot == 0.0
