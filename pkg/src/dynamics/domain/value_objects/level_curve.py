"""
Dynamics Domain Value Object - LevelCurve.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.shared.domain.enums import PortraitMode


@dataclass(frozen=True, eq=False)
class LevelCurve:
    """
    Value Object: one energy level of a phase portrait.

    The curve velocity = +/- sqrt(2 (E - V(q))) is sampled on the accessible
    part of a coordinate grid (q = z on the axis, q = r in the plane with
    V = W). Where the radicand vanishes a single point with zero velocity is
    kept instead of a +/- pair.

    Attributes:
        mode: Axial or planar portrait
        energy: Energy level E
        angular_momentum: Lambda (0 for axial portraits)
        coordinates: Accessible grid coordinates, increasing
        speeds: sqrt(2 (E - V)) at those coordinates
        grid_indices: Positions of the accessible points in the sampled grid
        grid_size: Size of the sampled grid
    """

    mode: PortraitMode
    energy: float
    angular_momentum: float
    coordinates: np.ndarray
    speeds: np.ndarray
    grid_indices: np.ndarray
    grid_size: int

    @property
    def is_empty(self) -> bool:
        """True when the level is inaccessible on the grid."""
        return self.coordinates.size == 0

    def components(self) -> list[tuple[int, int]]:
        """
        Contiguous runs of accessible grid points as (first, last) grid indices.

        A run that touches neither end of the grid is a closed loop of the portrait.
        """
        if self.is_empty:
            return []
        breaks = np.nonzero(np.diff(self.grid_indices) > 1)[0]
        starts = np.concatenate(([0], breaks + 1))
        ends = np.concatenate((breaks, [self.grid_indices.size - 1]))
        indices = self.grid_indices
        return [(int(indices[start]), int(indices[end])) for start, end in zip(starts, ends, strict=True)]

    def closed_loops(self) -> list[tuple[int, int]]:
        """Runs that stay strictly inside the grid."""
        return [run for run in self.components() if run[0] > 0 and run[1] < self.grid_size - 1]

    def to_frame(self) -> pd.DataFrame:
        """
        Table with columns mode, Lambda, E, q, v: the upper branch followed by the lower branch.
        """
        lower = self.speeds > 0.0
        coordinates = np.concatenate((self.coordinates, self.coordinates[lower][::-1]))
        velocities = np.concatenate((self.speeds, -self.speeds[lower][::-1]))
        return pd.DataFrame(
            {
                "mode": [self.mode.value] * coordinates.size,
                "Lambda": np.full(coordinates.shape, self.angular_momentum),
                "E": np.full(coordinates.shape, self.energy),
                "q": coordinates,
                "v": velocities,
            }
        )
