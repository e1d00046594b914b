"""
CLI Domain Value Object - Tolerances.
"""

from dataclasses import asdict, dataclass, fields

from src.shared.domain.constants import BifurcationSettings, IntegratorDefaults, OracleSettings, ScanSettings
from src.shared.domain.exceptions import ConfigurationError


@dataclass(frozen=True)
class Tolerances:
    """
    Value Object: numerical tolerances of a run.

    Attributes:
        rtol: Relative integrator tolerance
        atol: Absolute integrator tolerance
        oracle: Absolute quadrature-oracle tolerance
        root: Relative root tolerance of the critical-point scan
        bifurcation: Width of the final bifurcation bracket
    """

    rtol: float = IntegratorDefaults.RELATIVE_TOLERANCE
    atol: float = IntegratorDefaults.ABSOLUTE_TOLERANCE
    oracle: float = OracleSettings.ABSOLUTE_TOLERANCE
    root: float = ScanSettings.ROOT_RELATIVE_TOLERANCE
    bifurcation: float = BifurcationSettings.DEFAULT_TOLERANCE

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0.0:
                raise ConfigurationError(f"Tolerance {item.name} must be a positive number, got {value!r}")

    @classmethod
    def from_dict(cls, record: dict | None) -> "Tolerances":
        """
        Tolerances from a partial mapping; missing entries take their defaults.

        Raises:
            ConfigurationError: On unknown keys or non-positive values
        """
        record = record or {}
        known = {item.name for item in fields(cls)}
        unknown = set(record) - known
        if unknown:
            raise ConfigurationError(f"Unknown tolerance(s): {', '.join(sorted(unknown))}")
        return cls(**record)

    def to_dict(self) -> dict:
        """All tolerances by name."""
        return asdict(self)
