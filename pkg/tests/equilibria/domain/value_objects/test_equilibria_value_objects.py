"""
Unit Tests for the equilibria value objects.

Test categories:
- EquilibriumReport validation and records
- OriginSpectrum verdicts
- BifurcationResult bounds
- MonodromyResult trivial pair handling
"""

import math

import pytest

from src.equilibria.domain.value_objects import (
    BifurcationResult,
    EpicyclicFrequencies,
    EquilibriumReport,
    MonodromyResult,
    OriginSpectrum,
    complex_record,
    complex_records,
)
from src.shared.domain.enums import EquilibriumKind, Region, StabilityVerdict
from src.shared.domain.exceptions import NumericalDomainError


def make_report(**overrides) -> EquilibriumReport:
    """An exterior stable report with optional field overrides."""
    fields = {
        "r0": 6.0,
        "angular_momentum": 2.5,
        "residual": 1e-16,
        "curvature": 0.01,
        "kind": EquilibriumKind.STABLE_MIN,
        "region": Region.EXTERIOR,
        "bracket": (5.999999, 6.000001),
    }
    fields.update(overrides)
    return EquilibriumReport(**fields)


class TestSerialization:
    """Tests for complex-number records."""

    def test_complex_record(self):
        """Complex numbers become {re, im} objects."""
        assert complex_record(1.5 - 2j) == {"re": 1.5, "im": -2.0}
        assert complex_records(None) is None
        assert complex_records([1j]) == [{"re": 0.0, "im": 1.0}]


class TestEquilibriumReport:
    """Tests for EquilibriumReport."""

    def test_kind_must_match_curvature(self):
        """A stable minimum needs W'' > 0."""
        with pytest.raises(NumericalDomainError):
            make_report(curvature=-0.01)
        with pytest.raises(NumericalDomainError):
            make_report(kind=EquilibriumKind.UNSTABLE_MAX)

    def test_negative_radius_rejected(self):
        """r0 >= 0."""
        with pytest.raises(NumericalDomainError):
            make_report(r0=-1.0)

    def test_degenerate_accepts_any_sign(self):
        """Degenerate points carry the tiny curvature as found."""
        assert make_report(kind=EquilibriumKind.DEGENERATE, curvature=-1e-12).kind is EquilibriumKind.DEGENERATE

    def test_to_dict(self):
        """Record keys and enum values."""
        record = make_report().with_spectrum((1j, -1j), StabilityVerdict.SPECTRALLY_STABLE).to_dict()
        assert record["kind"] == "stable-min"
        assert record["region"] == "exterior"
        assert record["bracket"] == [5.999999, 6.000001]
        assert record["eigenvalues"] == [{"re": 0.0, "im": 1.0}, {"re": 0.0, "im": -1.0}]
        assert record["verdict"] == "spectrally-stable"
        assert record["Lambda"] == 2.5

    def test_origin(self):
        """The origin report has no bracket."""
        report = make_report(
            r0=0.0, bracket=None, region=Region.HOLE, kind=EquilibriumKind.UNSTABLE_MAX, curvature=-1.0
        )
        assert report.is_origin
        assert report.to_dict()["bracket"] is None


class TestOriginSpectrum:
    """Tests for OriginSpectrum."""

    def test_saddle_is_unstable(self):
        """A real pair makes the origin unstable."""
        real = math.sqrt(16.0 / 21.0)
        imaginary = math.sqrt(32.0 / 21.0)
        spectrum = OriginSpectrum(
            hessian_diagonal=(-16.0 / 21.0, -16.0 / 21.0, 32.0 / 21.0),
            eigenvalues=(-real, -real, -imaginary * 1j, imaginary * 1j, real, real),
        )
        assert spectrum.trace == pytest.approx(0.0, abs=1e-15)
        assert spectrum.in_plane_magnitude == pytest.approx(real)
        assert spectrum.axial_magnitude == pytest.approx(imaginary)
        assert spectrum.verdict is StabilityVerdict.SPECTRALLY_UNSTABLE
        assert spectrum.to_dict()["verdict"] == "spectrally-unstable"

    def test_centre_is_stable(self):
        """Purely imaginary eigenvalues are spectrally stable."""
        spectrum = OriginSpectrum(hessian_diagonal=(1.0, 1.0, 1.0), eigenvalues=(-1j, -1j, -1j, 1j, 1j, 1j))
        assert spectrum.verdict is StabilityVerdict.SPECTRALLY_STABLE


class TestBifurcationResult:
    """Tests for BifurcationResult."""

    def test_lambda_star_inside_bracket(self):
        """The midpoint must lie in its bracket."""
        with pytest.raises(NumericalDomainError):
            BifurcationResult(3.0, (1.0, 2.0), None, 0, 2, 10)

    def test_sufficient_bound(self):
        """Comparison with the analytic bound, None for stacks."""
        result = BifurcationResult(2.0, (1.9999995, 2.0000005), 2.41, 0, 2, 22)
        assert result.width == pytest.approx(1e-6)
        assert result.within_sufficient_bound is True
        assert BifurcationResult(2.0, (1.9, 2.1), None, 0, 2, 3).within_sufficient_bound is None
        assert result.to_dict()["lambda_star"] == 2.0


class TestMonodromyResult:
    """Tests for MonodromyResult."""

    def test_nontrivial_eigenvalues(self):
        """The trivial pair is removed from the verdict set."""
        eigenvalues = (-1j, 1j, 0.5 - 0.866j, 0.5 + 0.866j, 1.0 - 1e-6, 1.0 + 1e-6)
        result = MonodromyResult(
            r0=5.0,
            angular_momentum=2.2,
            period=71.4,
            eigenvalues=eigenvalues,
            trivial_pair=(1.0 - 1e-6, 1.0 + 1e-6),
            verdict=StabilityVerdict.SPECTRALLY_STABLE,
            determinant=1.0,
            frequencies=EpicyclicFrequencies(kappa_squared=0.0077, nu_squared=0.0078),
        )
        assert result.nontrivial == (-1j, 1j, 0.5 - 0.866j, 0.5 + 0.866j)
        assert result.trivial_distance == pytest.approx(1e-6)
        record = result.to_dict()
        assert record["kappa_squared"] == 0.0077
        assert len(record["eigenvalues"]) == 6
