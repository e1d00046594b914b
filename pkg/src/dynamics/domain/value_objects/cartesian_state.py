"""
Dynamics Domain Value Object - CartesianState.
"""

import math
from collections.abc import Sequence
from dataclasses import astuple, dataclass

import numpy as np

from src.potential.domain.value_objects import FieldPoint
from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True)
class CartesianState:
    """
    Value Object: position and velocity of a test particle.

    The energy 1/2 |v|^2 + U needs the bodies, so it is computed by
    EquationsOfMotionService.energy rather than stored here.
    """

    x: float
    y: float
    z: float
    vx: float
    vy: float
    vz: float

    def __post_init__(self):
        if not all(math.isfinite(value) for value in astuple(self)):
            raise NumericalDomainError(f"Cartesian state must be finite, got {astuple(self)}")

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "CartesianState":
        """Build a state from six numbers (x, y, z, vx, vy, vz)."""
        if len(values) != 6:
            raise NumericalDomainError(f"A Cartesian state needs 6 components, got {len(values)}")
        return cls(*(float(value) for value in values))

    def as_array(self) -> np.ndarray:
        """State vector (x, y, z, vx, vy, vz)."""
        return np.array(astuple(self), dtype=float)

    @property
    def position(self) -> FieldPoint:
        """Position as a field point."""
        return FieldPoint(self.x, self.y, self.z)

    @property
    def kinetic_energy(self) -> float:
        """1/2 |v|^2."""
        return 0.5 * (self.vx * self.vx + self.vy * self.vy + self.vz * self.vz)

    @property
    def angular_momentum(self) -> float:
        """Axial angular momentum x vy - y vx (conserved by axial symmetry)."""
        return self.x * self.vy - self.y * self.vx

    @property
    def is_planar(self) -> bool:
        """True when the motion stays in z = 0 (z = vz = 0)."""
        return self.z == 0.0 and self.vz == 0.0

    def reversed(self) -> "CartesianState":
        """Same position with the velocity negated."""
        return CartesianState(self.x, self.y, self.z, -self.vx, -self.vy, -self.vz)
