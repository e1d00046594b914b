"""
Unit Tests for EllipticIntegralService.

Test categories:
- Complete integrals against quadrature of their defining integrals
- Incomplete integrals and Heuman's lambda
- Small-parameter radial combination
- Domain errors
"""

import math

import numpy as np
import pytest
from scipy import integrate, special

from src.elliptic.domain.services import EllipticIntegralService
from src.shared.domain.exceptions import EllipticDomainError, NumericalDomainError

HALF_PI = 0.5 * math.pi


def quad(function, lower=0.0, upper=HALF_PI):
    """Reference value of a smooth integral."""
    value, _ = integrate.quad(function, lower, upper, epsabs=1e-15, epsrel=1e-14, limit=200)
    return value


class TestCompleteIntegrals:
    """Tests for K, E and Pi."""

    def test_values_at_zero(self):
        """K(0) = E(0) = pi/2."""
        assert EllipticIntegralService.complete_k(0.0) == pytest.approx(HALF_PI, abs=1e-15)
        assert EllipticIntegralService.complete_e(0.0) == pytest.approx(HALF_PI, abs=1e-15)

    def test_complete_e_at_one(self):
        """E(1) = 1."""
        assert EllipticIntegralService.complete_e(1.0) == pytest.approx(1.0, abs=1e-15)

    def test_complete_k_matches_quadrature(self):
        """K(0.5) against its defining integral."""
        expected = quad(lambda t: 1.0 / math.sqrt(1.0 - 0.5 * math.sin(t) ** 2))
        assert EllipticIntegralService.complete_k(0.5) == pytest.approx(expected, abs=1e-13)

    def test_complete_e_matches_quadrature(self):
        """E(0.36) against its defining integral."""
        expected = quad(lambda t: math.sqrt(1.0 - 0.36 * math.sin(t) ** 2))
        assert EllipticIntegralService.complete_e(0.36) == pytest.approx(expected, abs=1e-13)

    def test_complete_pi_matches_quadrature(self):
        """Pi(0.5, 0.25) against its defining integral."""
        expected = quad(
            lambda t: 1.0 / ((1.0 - 0.5 * math.sin(t) ** 2) * math.sqrt(1.0 - 0.25 * math.sin(t) ** 2))
        )
        assert EllipticIntegralService.complete_pi(0.5, 0.25) == pytest.approx(expected, abs=1e-12)

    def test_complete_pi_reductions(self):
        """Pi(0, m) = K(m) and Pi(m, m) = E(m) / (1 - m)."""
        m = 0.4
        assert EllipticIntegralService.complete_pi(0.0, m) == pytest.approx(
            EllipticIntegralService.complete_k(m), rel=1e-14
        )
        assert EllipticIntegralService.complete_pi(m, m) == pytest.approx(
            EllipticIntegralService.complete_e(m) / (1.0 - m), rel=1e-13
        )

    def test_complement_matches_direct(self):
        """K from the complementary parameter agrees with K(m)."""
        assert EllipticIntegralService.complete_k_complement(0.7) == pytest.approx(
            EllipticIntegralService.complete_k(0.3), rel=1e-14
        )

    def test_negative_parameter_accepted(self):
        """K(m) is real for m < 0."""
        assert EllipticIntegralService.complete_k(-1.0) == pytest.approx(float(special.ellipk(-1.0)), rel=1e-14)

    def test_legendre_relation(self):
        """E K' + E' K - K K' = pi/2 over a thousand parameters."""
        for m in np.linspace(0.001, 0.999, 1000):
            k_value = EllipticIntegralService.complete_k(m)
            e_value = EllipticIntegralService.complete_e(m)
            k_comp = EllipticIntegralService.complete_k(1.0 - m)
            e_comp = EllipticIntegralService.complete_e(1.0 - m)
            assert e_value * k_comp + e_comp * k_value - k_value * k_comp == pytest.approx(HALF_PI, abs=1e-13)


class TestIncompleteIntegrals:
    """Tests for F, E(phi|m) and Heuman's lambda."""

    def test_incomplete_f_matches_quadrature(self):
        """F(0.7|0.3) against its defining integral."""
        expected = quad(lambda t: 1.0 / math.sqrt(1.0 - 0.3 * math.sin(t) ** 2), 0.0, 0.7)
        assert EllipticIntegralService.incomplete_f(0.7, 0.3) == pytest.approx(expected, abs=1e-13)

    def test_incomplete_e_matches_quadrature(self):
        """E(1.0|0.9) against its defining integral."""
        expected = quad(lambda t: math.sqrt(1.0 - 0.9 * math.sin(t) ** 2), 0.0, 1.0)
        assert EllipticIntegralService.incomplete_e(1.0, 0.9) == pytest.approx(expected, abs=1e-13)

    def test_incomplete_at_right_angle_equals_complete(self):
        """F(pi/2|m) = K(m) and E(pi/2|m) = E(m) exactly."""
        assert EllipticIntegralService.incomplete_f(HALF_PI, 0.6) == EllipticIntegralService.complete_k(0.6)
        assert EllipticIntegralService.incomplete_e(HALF_PI, 0.6) == EllipticIntegralService.complete_e(0.6)

    def test_parameter_zero_is_amplitude(self):
        """F(phi|0) = E(phi|0) = phi."""
        assert EllipticIntegralService.incomplete_f(0.9, 0.0) == pytest.approx(0.9, abs=1e-15)
        assert EllipticIntegralService.incomplete_e(0.9, 0.0) == pytest.approx(0.9, abs=1e-15)

    def test_heuman_lambda_at_right_angle(self):
        """Lambda_0(pi/2, m) = 1 by the Legendre relation."""
        assert EllipticIntegralService.heuman_lambda(HALF_PI, 0.3) == pytest.approx(1.0, abs=1e-13)

    def test_heuman_lambda_at_zero_parameter(self):
        """Lambda_0(phi, 0) = sin(phi)."""
        for phi in (0.1, 0.5, 1.2):
            assert EllipticIntegralService.heuman_lambda(phi, 0.0) == pytest.approx(math.sin(phi), abs=1e-13)

    def test_heuman_lambda_at_unit_parameter(self):
        """Lambda_0(phi, 1) = 2 phi / pi."""
        assert EllipticIntegralService.heuman_lambda(0.8, 1.0) == pytest.approx(0.8 / HALF_PI, abs=1e-15)

    def test_heuman_lambda_is_continuous_near_right_angle(self):
        """Values just below pi/2 approach the Legendre limit."""
        assert EllipticIntegralService.heuman_lambda(HALF_PI - 1e-9, 0.3) == pytest.approx(1.0, abs=1e-8)

    def test_heuman_combination_zero_amplitude(self):
        """The combination vanishes at phi = 0."""
        assert EllipticIntegralService.heuman_combination(0.0, 0.5) == 0.0


class TestRadialCombination:
    """Tests for (1 - m/2) K - E."""

    def test_series_matches_direct_below_limit(self):
        """Series and direct subtraction agree where both are accurate."""
        m = 0.0049
        direct = (1.0 - 0.5 * m) * special.ellipk(m) - special.ellipe(m)
        assert EllipticIntegralService.radial_combination(m) == pytest.approx(direct, rel=1e-7)

    def test_continuous_across_series_limit(self):
        """No visible jump where the evaluation switches to the series."""
        below = EllipticIntegralService.radial_combination(5.0e-3 * (1.0 - 1e-9))
        above = EllipticIntegralService.radial_combination(5.0e-3)
        assert below == pytest.approx(above, rel=1e-8)

    def test_leading_order(self):
        """(1 - m/2) K - E ~ pi m^2 / 32 for small m."""
        m = 1e-6
        assert EllipticIntegralService.radial_combination(m) == pytest.approx(math.pi * m * m / 32.0, rel=1e-5)


class TestDomainErrors:
    """Tests for rejected arguments."""

    def test_complete_k_at_one_raises(self):
        """K diverges at m = 1."""
        with pytest.raises(EllipticDomainError):
            EllipticIntegralService.complete_k(1.0)

    def test_complete_k_within_four_epsilons_raises(self):
        """Parameters within four machine epsilons of 1 are rejected."""
        with pytest.raises(EllipticDomainError):
            EllipticIntegralService.complete_k(1.0 - 2.0 * np.finfo(float).eps)

    def test_complete_e_above_one_raises(self):
        """E(m) is not real for m > 1."""
        with pytest.raises(EllipticDomainError):
            EllipticIntegralService.complete_e(1.5)

    def test_singular_characteristic_raises(self):
        """Pi diverges at n2 = 1."""
        with pytest.raises(EllipticDomainError):
            EllipticIntegralService.complete_pi(1.0, 0.5)

    def test_amplitude_out_of_range_raises(self):
        """Amplitudes must lie in [0, pi/2]."""
        with pytest.raises(EllipticDomainError):
            EllipticIntegralService.incomplete_f(2.0, 0.5)

    def test_non_finite_raises_domain_error(self):
        """NaN is a numerical-domain error."""
        with pytest.raises(NumericalDomainError):
            EllipticIntegralService.complete_e(float("nan"))

    def test_heuman_lambda_parameter_range(self):
        """Heuman's lambda needs 0 <= m <= 1."""
        with pytest.raises(EllipticDomainError):
            EllipticIntegralService.heuman_lambda(0.5, 1.2)
