"""
Equilibria Domain Value Object - OriginSpectrum.
"""

import math
from dataclasses import dataclass

from src.equilibria.domain.value_objects.serialization import complex_records
from src.shared.domain.constants import StabilitySettings
from src.shared.domain.enums import StabilityVerdict


@dataclass(frozen=True)
class OriginSpectrum:
    """
    Value Object: linearization of the motion at the origin.

    The Hessian of U at the origin is diagonal by symmetry with U_xx = U_yy;
    the six eigenvalues of [[0, I], [-H, 0]] are +/- sqrt(-U_ii).

    Attributes:
        hessian_diagonal: (U_xx, U_yy, U_zz)
        eigenvalues: Six eigenvalues sorted by (real part, imaginary part)
    """

    hessian_diagonal: tuple[float, float, float]
    eigenvalues: tuple[complex, ...]

    @property
    def trace(self) -> float:
        """U_xx + U_yy + U_zz, zero for a harmonic potential."""
        return sum(self.hessian_diagonal)

    @property
    def in_plane_magnitude(self) -> float:
        """sqrt(|U_xx|)."""
        return math.sqrt(abs(self.hessian_diagonal[0]))

    @property
    def axial_magnitude(self) -> float:
        """sqrt(|U_zz|)."""
        return math.sqrt(abs(self.hessian_diagonal[2]))

    @property
    def verdict(self) -> StabilityVerdict:
        """Spectrally stable iff every eigenvalue is on the imaginary axis."""
        tolerance = StabilitySettings.IMAGINARY_AXIS_TOLERANCE
        if all(abs(value.real) <= tolerance for value in self.eigenvalues):
            return StabilityVerdict.SPECTRALLY_STABLE
        return StabilityVerdict.SPECTRALLY_UNSTABLE

    def to_dict(self) -> dict:
        """JSON-shaped record."""
        return {
            "hessian_diagonal": list(self.hessian_diagonal),
            "trace": self.trace,
            "eigenvalues": complex_records(self.eigenvalues),
            "verdict": self.verdict.value,
        }
