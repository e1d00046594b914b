"""
Equilibria Domain Value Object - BifurcationResult.
"""

from dataclasses import dataclass

from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True)
class BifurcationResult:
    """
    Value Object: angular momentum at which exterior circular orbits appear.

    Attributes:
        lambda_star: Midpoint of the final bisection bracket
        bracket: Final bracket (low, high): counts differ at its ends
        lambda_sufficient: Analytic sufficient bound sqrt(8 mu a^3 / (pi (a^2 - b^2))),
            None for stacks
        low_count: Exterior critical points at bracket[0]
        high_count: Exterior critical points at bracket[1]
        iterations: Bisection steps taken
    """

    lambda_star: float
    bracket: tuple[float, float]
    lambda_sufficient: float | None
    low_count: int
    high_count: int
    iterations: int

    def __post_init__(self):
        low, high = self.bracket
        if not low <= self.lambda_star <= high:
            raise NumericalDomainError("lambda_star must lie inside its bracket")

    @property
    def width(self) -> float:
        """Width of the final bracket."""
        return self.bracket[1] - self.bracket[0]

    @property
    def within_sufficient_bound(self) -> bool | None:
        """lambda_star <= lambda_sufficient, None without an analytic bound."""
        if self.lambda_sufficient is None:
            return None
        return self.lambda_star <= self.lambda_sufficient

    def to_dict(self) -> dict:
        """JSON-shaped record."""
        return {
            "lambda_star": self.lambda_star,
            "bracket": list(self.bracket),
            "width": self.width,
            "lambda_sufficient": self.lambda_sufficient,
            "low_count": self.low_count,
            "high_count": self.high_count,
            "iterations": self.iterations,
        }
