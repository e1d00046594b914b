"""
Dynamics Domain Value Object - Trajectory.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.shared.domain.enums import TerminationReason
from src.shared.domain.exceptions import NumericalDomainError

CARTESIAN_COLUMNS = ("x", "y", "z", "vx", "vy", "vz")
REDUCED_COLUMNS = ("r", "rdot", "z", "zdot")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Value Object: time-ordered samples of an integrated orbit.

    Attributes:
        times: Sample times, strictly increasing
        states: One row per sample; Cartesian (6 columns) or reduced (4 columns)
        reason: Why the integration stopped
        energies: Energy at every sample
        angular_momenta: Axial angular momentum at every sample
        segments: Number of solver runs (restarts at non-colliding plane crossings)
    """

    times: np.ndarray
    states: np.ndarray
    reason: TerminationReason
    energies: np.ndarray
    angular_momenta: np.ndarray
    segments: int = 1

    def __post_init__(self):
        if self.times.ndim != 1 or self.times.size == 0:
            raise NumericalDomainError("A trajectory needs at least one sample")
        if self.states.shape[0] != self.times.size or self.states.shape[1] not in (4, 6):
            raise NumericalDomainError(f"State table of shape {self.states.shape} does not match the times")
        if np.any(np.diff(self.times) <= 0.0):
            raise NumericalDomainError("Trajectory times must be strictly increasing")

    @property
    def is_reduced(self) -> bool:
        """True for (r, rdot, z, zdot) samples."""
        return self.states.shape[1] == 4

    @property
    def columns(self) -> tuple[str, ...]:
        """Names of the state columns."""
        return REDUCED_COLUMNS if self.is_reduced else CARTESIAN_COLUMNS

    @property
    def final_time(self) -> float:
        """Time of the last sample."""
        return float(self.times[-1])

    @property
    def final_state(self) -> np.ndarray:
        """Last sampled state vector."""
        return self.states[-1].copy()

    @property
    def energy_drift(self) -> float:
        """max |E - E0| / max(|E0|, 1e-300) over the samples."""
        reference = self.energies[0]
        return float(np.max(np.abs(self.energies - reference)) / max(abs(reference), 1e-300))

    @property
    def angular_momentum_drift(self) -> float:
        """max |L - L0| / max(|L0|, 1e-300) over the samples."""
        reference = self.angular_momenta[0]
        return float(np.max(np.abs(self.angular_momenta - reference)) / max(abs(reference), 1e-300))

    def radii(self) -> np.ndarray:
        """Cylindrical radius at every sample."""
        if self.is_reduced:
            return self.states[:, 0].copy()
        return np.hypot(self.states[:, 0], self.states[:, 1])

    def heights(self) -> np.ndarray:
        """Height z at every sample."""
        return self.states[:, 2].copy()

    def to_frame(self) -> pd.DataFrame:
        """Table with t, the state columns, E and L."""
        frame = pd.DataFrame(self.states, columns=list(self.columns))
        frame.insert(0, "t", self.times)
        frame["E"] = self.energies
        frame["L"] = self.angular_momenta
        return frame
