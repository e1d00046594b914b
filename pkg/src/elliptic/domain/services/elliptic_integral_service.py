"""
Domain Service for Elliptic Integrals.

Every public operation takes the parameter m = k**2 (never the modulus k) and
the characteristic n**2 of the third kind. Evaluation is delegated to the
Carlson / AGM based routines of scipy.special; this service owns the argument
convention, the domain checks and the singularity-aware combinations the
potential formulas need.
"""

import math

from scipy import special

from src.shared.domain.constants import EllipticTolerances
from src.shared.domain.exceptions import EllipticDomainError

HALF_PI = 0.5 * math.pi


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise EllipticDomainError(f"{name} must be finite, got {value}")
    return value


def _require_amplitude(phi: float) -> float:
    phi = _require_finite("phi", phi)
    if phi < 0.0 or phi > HALF_PI:
        raise EllipticDomainError(f"Amplitude phi must lie in [0, pi/2], got {phi}")
    return phi


class EllipticIntegralService:
    """
    Domain Service: complete and incomplete elliptic integrals and Heuman's lambda.

    Conventions:
    - K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt
    - E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt
    - Pi(n2, m) = int_0^{pi/2} (1 - n2 sin^2 t)^{-1} (1 - m sin^2 t)^{-1/2} dt
    - F(phi|m), E(phi|m) are the incomplete counterparts of K and E
    """

    @staticmethod
    def complete_k(m: float) -> float:
        """
        Complete elliptic integral of the first kind K(m).

        Negative parameters are accepted (scipy applies the imaginary-modulus
        transformation). Values closer to 1 than four machine epsilons are
        rejected instead of clamped.

        Args:
            m: Parameter m = k**2, m < 1

        Returns:
            float: K(m)

        Raises:
            EllipticDomainError: If m >= 1 - 4 eps or m is not finite
        """
        m = _require_finite("m", m)
        near_one = EllipticTolerances.NEAR_SINGULAR_EPSILONS * EllipticTolerances.MACHINE_EPSILON
        if m >= 1.0 or 1.0 - m < near_one:
            raise EllipticDomainError(f"K(m) diverges at m = 1; got m = {m!r}")
        return float(special.ellipk(m))

    @staticmethod
    def complete_k_complement(m1: float) -> float:
        """
        K(1 - m1) evaluated from the complementary parameter m1 = 1 - m.

        Used where m1 is known accurately but 1 - m1 rounds to 1 (points a few
        ulps away from an edge circle).

        Raises:
            EllipticDomainError: If m1 <= 0
        """
        m1 = _require_finite("m1", m1)
        if m1 <= 0.0:
            raise EllipticDomainError(f"Complementary parameter must be positive, got {m1!r}")
        return float(special.ellipkm1(m1))

    @staticmethod
    def complete_e(m: float) -> float:
        """
        Complete elliptic integral of the second kind E(m), m <= 1.

        Raises:
            EllipticDomainError: If m > 1
        """
        m = _require_finite("m", m)
        if m > 1.0:
            raise EllipticDomainError(f"E(m) is real only for m <= 1; got m = {m!r}")
        return float(special.ellipe(m))

    @staticmethod
    def complete_pi(n2: float, m: float) -> float:
        """
        Complete elliptic integral of the third kind Pi(n2, m).

        Uses Pi = R_F(0, 1-m, 1) + (n2/3) R_J(0, 1-m, 1, 1-n2). For n2 > 1 the
        Cauchy principal value is returned.

        Raises:
            EllipticDomainError: If n2 == 1 or m >= 1
        """
        n2 = _require_finite("n2", n2)
        m = _require_finite("m", m)
        if m >= 1.0:
            raise EllipticDomainError(f"Pi(n2, m) diverges at m = 1; got m = {m!r}")
        if n2 == 1.0:
            raise EllipticDomainError("Pi(n2, m) diverges at the singular characteristic n2 = 1")
        y = 1.0 - m
        value = special.elliprf(0.0, y, 1.0)
        if n2 != 0.0:
            value += n2 / 3.0 * special.elliprj(0.0, y, 1.0, 1.0 - n2)
        return float(value)

    @staticmethod
    def incomplete_f(phi: float, m: float) -> float:
        """
        Incomplete elliptic integral of the first kind F(phi|m).

        F(pi/2|m) is routed through complete_k so that both agree exactly.

        Raises:
            EllipticDomainError: If phi is outside [0, pi/2], m > 1, or (phi, m) = (pi/2, 1)
        """
        phi = _require_amplitude(phi)
        m = _require_finite("m", m)
        if m > 1.0:
            raise EllipticDomainError(f"F(phi|m) requires m <= 1; got m = {m!r}")
        if phi == HALF_PI:
            return EllipticIntegralService.complete_k(m)
        return float(special.ellipkinc(phi, m))

    @staticmethod
    def incomplete_e(phi: float, m: float) -> float:
        """
        Incomplete elliptic integral of the second kind E(phi|m).

        Raises:
            EllipticDomainError: If phi is outside [0, pi/2] or m > 1
        """
        phi = _require_amplitude(phi)
        m = _require_finite("m", m)
        if m > 1.0:
            raise EllipticDomainError(f"E(phi|m) requires m <= 1; got m = {m!r}")
        if phi == HALF_PI:
            return EllipticIntegralService.complete_e(m)
        return float(special.ellipeinc(phi, m))

    @staticmethod
    def heuman_combination(phi: float, m1: float) -> float:
        """
        E(m) F(phi|m1) + K(m) E(phi|m1) - K(m) F(phi|m1), with m = 1 - m1.

        This is (pi/2) * Lambda_0(phi, m). Working from the complementary
        parameter keeps K accurate next to the edge circles.

        Args:
            phi: Amplitude in [0, pi/2]
            m1: Complementary parameter 1 - m, in (0, 1]

        Returns:
            float: The combination value
        """
        phi = _require_amplitude(phi)
        m1 = _require_finite("m1", m1)
        if m1 <= 0.0 or m1 > 1.0:
            raise EllipticDomainError(f"Complementary parameter must lie in (0, 1], got {m1!r}")
        if phi == 0.0:
            return 0.0
        if phi == HALF_PI:
            # Legendre relation
            return HALF_PI
        m = 1.0 - m1
        k_value = float(special.ellipkm1(m1))
        e_value = float(special.ellipe(m))
        f_phi = EllipticIntegralService.incomplete_f(phi, m1)
        e_phi = EllipticIntegralService.incomplete_e(phi, m1)
        return e_value * f_phi + k_value * (e_phi - f_phi)

    @staticmethod
    def heuman_lambda(phi: float, m: float) -> float:
        """
        Heuman's lambda function Lambda_0(phi, m).

        Lambda_0 = (2/pi) (E(m) F(phi|1-m) + K(m) E(phi|1-m) - K(m) F(phi|1-m)).
        The third-kind integral is never used. Lambda_0(pi/2, m) = 1 on [0, 1)
        by the Legendre relation; the m = 1 limit is 2 phi / pi.

        Args:
            phi: Amplitude in [0, pi/2]
            m: Parameter in [0, 1]

        Returns:
            float: Lambda_0(phi, m)
        """
        phi = _require_amplitude(phi)
        m = _require_finite("m", m)
        if m < 0.0 or m > 1.0:
            raise EllipticDomainError(f"Heuman's lambda requires 0 <= m <= 1; got m = {m!r}")
        if m == 1.0:
            return phi / HALF_PI
        return EllipticIntegralService.heuman_combination(phi, 1.0 - m) / HALF_PI

    @staticmethod
    def radial_combination(m: float, m1: float | None = None) -> float:
        """
        (1 - m/2) K(m) - E(m), the elliptic factor of radial ring and disk fields.

        The combination is O(m**2) for small m, where direct subtraction loses
        all digits; below EllipticTolerances.SMALL_PARAMETER_SERIES_LIMIT it is
        summed from its power series instead.

        Args:
            m: Parameter in [0, 1)
            m1: Optional accurate complementary parameter 1 - m

        Returns:
            float: (1 - m/2) K(m) - E(m)
        """
        m = _require_finite("m", m)
        if m < 0.0:
            raise EllipticDomainError(f"Radial combination requires m >= 0; got m = {m!r}")
        if m < EllipticTolerances.SMALL_PARAMETER_SERIES_LIMIT:
            series = 1.0 / 16.0 + m * (3.0 / 64.0 + m * (75.0 / 2048.0 + m * 245.0 / 8192.0))
            return HALF_PI * m * m * series
        if m1 is None:
            m1 = 1.0 - m
        k_value = EllipticIntegralService.complete_k_complement(m1)
        return (1.0 - 0.5 * m) * k_value - float(special.ellipe(m))
