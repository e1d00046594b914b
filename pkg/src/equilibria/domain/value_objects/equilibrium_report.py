"""
Equilibria Domain Value Object - EquilibriumReport.
"""

from dataclasses import dataclass, replace

from src.equilibria.domain.value_objects.serialization import complex_records
from src.shared.domain.enums import EquilibriumKind, Region, StabilityVerdict
from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True)
class EquilibriumReport:
    """
    Value Object: one critical point r0 of the effective potential W.

    Attributes:
        r0: Radius of the critical point (0 for the origin)
        angular_momentum: Lambda the scan was run at
        residual: |W'(r0)|
        curvature: W''(r0)
        kind: Classification by the sign of W''
        region: Radial region containing r0
        bracket: Sign-change certificate (lo, hi) around r0; None for the origin
        eigenvalues: Optional linearization or monodromy eigenvalues
        verdict: Optional spectral verdict attached with the eigenvalues

    Business Rules:
    - r0 >= 0, residual >= 0
    - stable-min requires W'' > 0 and unstable-max requires W'' < 0
    """

    r0: float
    angular_momentum: float
    residual: float
    curvature: float
    kind: EquilibriumKind
    region: Region
    bracket: tuple[float, float] | None = None
    eigenvalues: tuple[complex, ...] | None = None
    verdict: StabilityVerdict | None = None

    def __post_init__(self):
        if self.r0 < 0.0 or self.residual < 0.0:
            raise NumericalDomainError("Critical points need r0 >= 0 and a non-negative residual")
        if self.kind is EquilibriumKind.STABLE_MIN and not self.curvature > 0.0:
            raise NumericalDomainError(f"stable-min with W'' = {self.curvature!r} <= 0")
        if self.kind is EquilibriumKind.UNSTABLE_MAX and not self.curvature < 0.0:
            raise NumericalDomainError(f"unstable-max with W'' = {self.curvature!r} >= 0")

    @property
    def is_origin(self) -> bool:
        """True for the critical point at the centre."""
        return self.r0 == 0.0

    def with_spectrum(self, eigenvalues: tuple[complex, ...], verdict: StabilityVerdict) -> "EquilibriumReport":
        """Copy of the report carrying eigenvalues and their verdict."""
        return replace(self, eigenvalues=tuple(eigenvalues), verdict=verdict)

    def to_dict(self) -> dict:
        """JSON-shaped record with the bracket and residual certificates."""
        return {
            "r0": self.r0,
            "Lambda": self.angular_momentum,
            "residual": self.residual,
            "curvature": self.curvature,
            "kind": self.kind.value,
            "region": self.region.value,
            "bracket": None if self.bracket is None else list(self.bracket),
            "eigenvalues": complex_records(self.eigenvalues),
            "verdict": None if self.verdict is None else self.verdict.value,
        }
