"""
Equilibria Domain Value Objects - Monodromy of Circular Orbits.
"""

from dataclasses import dataclass

from src.equilibria.domain.value_objects.serialization import complex_records
from src.shared.domain.enums import StabilityVerdict


@dataclass(frozen=True)
class EpicyclicFrequencies:
    """
    Value Object: squared small-oscillation frequencies about a circular orbit.

    Attributes:
        kappa_squared: Radial, W''(r0)
        nu_squared: Vertical, U_zz(r0, 0)
    """

    kappa_squared: float
    nu_squared: float

    def to_dict(self) -> dict:
        """JSON-shaped record."""
        return {"kappa_squared": self.kappa_squared, "nu_squared": self.nu_squared}


@dataclass(frozen=True)
class MonodromyResult:
    """
    Value Object: monodromy matrix spectrum of a circular orbit over one period.

    Attributes:
        r0: Orbit radius
        angular_momentum: Lambda
        period: 2 pi r0^2 / Lambda
        eigenvalues: The six monodromy eigenvalues
        trivial_pair: The two eigenvalues closest to 1 (time shift and orbit-family directions)
        verdict: Unit-circle verdict over the four non-trivial eigenvalues
        determinant: det of the monodromy matrix (1 for a volume-preserving flow)
        frequencies: Epicyclic frequencies of the orbit
    """

    r0: float
    angular_momentum: float
    period: float
    eigenvalues: tuple[complex, ...]
    trivial_pair: tuple[complex, complex]
    verdict: StabilityVerdict
    determinant: float
    frequencies: EpicyclicFrequencies

    @property
    def nontrivial(self) -> tuple[complex, ...]:
        """The eigenvalues that decide the verdict."""
        remaining = list(self.eigenvalues)
        for value in self.trivial_pair:
            remaining.remove(value)
        return tuple(remaining)

    @property
    def trivial_distance(self) -> float:
        """max |lambda - 1| over the trivial pair."""
        return max(abs(value - 1.0) for value in self.trivial_pair)

    def to_dict(self) -> dict:
        """JSON-shaped record."""
        return {
            "r0": self.r0,
            "Lambda": self.angular_momentum,
            "period": self.period,
            "eigenvalues": complex_records(self.eigenvalues),
            "trivial_pair": complex_records(self.trivial_pair),
            "trivial_distance": self.trivial_distance,
            "determinant": self.determinant,
            "verdict": self.verdict.value,
            **self.frequencies.to_dict(),
        }
