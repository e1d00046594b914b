"""
Dynamics Domain Value Object - EffectivePotentialCurve.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True, eq=False)
class EffectivePotentialCurve:
    """
    Value Object: W(r) = Lambda^2 / (2 r^2) + U(r, 0) and W'(r) sampled on a radius grid.
    """

    angular_momentum: float
    radii: np.ndarray
    values: np.ndarray
    slopes: np.ndarray

    def __post_init__(self):
        if not self.radii.shape == self.values.shape == self.slopes.shape:
            raise NumericalDomainError("Effective-potential arrays must have equal shapes")

    def to_frame(self) -> pd.DataFrame:
        """Table with columns Lambda, r, W, Wprime."""
        return pd.DataFrame(
            {
                "Lambda": np.full(self.radii.shape, self.angular_momentum),
                "r": self.radii,
                "W": self.values,
                "Wprime": self.slopes,
            }
        )
