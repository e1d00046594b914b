"""
Domain Service - Brute-Force Quadrature Oracle.

Evaluates the defining integrals of the potential directly, independently of
every elliptic closed form. Points are rotated to (r, 0, z) by axial symmetry
and the azimuth is folded onto [0, pi]:

    plate:  U = -2 G sigma int_0^pi dtheta int_b^a rho drho / d(rho, theta)
    wire:   U = -(mu / pi) int_0^pi dtheta / d(a, theta)

with d^2 = (rho - r cos theta)^2 + (r sin theta)^2 + z^2. The outer integral
is adaptive (QAGS) and refines toward theta = 0 where the kernel peaks; the
inner one gets the peak rho = r cos theta as a break point.
"""

import math
from collections.abc import Callable

from scipy import integrate

from src.potential.domain.value_objects import AnnulusBody, Body, BodyStack, DiskBody, FieldPoint, WireBody
from src.shared.domain.constants import OracleSettings
from src.shared.domain.exceptions import (
    ConvergenceError,
    FieldDiscontinuityError,
    PreconditionError,
    SingularityError,
)
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)

# (outer radius, inner radius, G*sigma, normal jump)
Plate = tuple[float, float, float, float]


def _plates(bodies: Body) -> list[Plate]:
    if isinstance(bodies, DiskBody):
        return [(bodies.a, 0.0, bodies.surface_density, bodies.normal_jump)]
    if isinstance(bodies, (AnnulusBody, BodyStack)):
        stack = BodyStack.coerce(bodies)
        return [(member.a, member.b, member.surface_density, member.normal_jump) for member in stack.annuli]
    raise PreconditionError(f"Quadrature oracle does not support {type(bodies).__name__}")


def _distance(rho: float, theta: float, r: float, z: float) -> float:
    return math.sqrt((rho - r * math.cos(theta)) ** 2 + (r * math.sin(theta)) ** 2 + z * z)


def _outer(integrand: Callable[[float], float], tolerance: float, label: str) -> float:
    """
    Adaptive integral over theta in [0, pi] at absolute tolerance.

    Raises:
        ConvergenceError: If the error estimate exceeds the tolerance
    """
    result = integrate.quad(
        integrand,
        0.0,
        math.pi,
        epsabs=tolerance,
        epsrel=0.0,
        limit=OracleSettings.SUBDIVISION_LIMIT,
        full_output=1,
    )
    value, abserr = result[0], result[1]
    if len(result) > 3:
        logger.debug("Oracle %s: quadrature reported '%s' (abserr=%.3e)", label, result[3], abserr)
    if not math.isfinite(value) or abserr > tolerance:
        raise ConvergenceError(
            f"Quadrature oracle for the {label} reached abserr={abserr:.3e} above the tolerance {tolerance:.3e}"
        )
    return value


def _inner(integrand: Callable[[float], float], lower: float, upper: float, peak: float, tolerance: float) -> float:
    points = [peak] if lower < peak < upper else None
    return integrate.quad(
        integrand,
        lower,
        upper,
        points=points,
        epsabs=tolerance * OracleSettings.INNER_TOLERANCE_FACTOR,
        epsrel=0.0,
        limit=OracleSettings.SUBDIVISION_LIMIT,
        full_output=1,
    )[0]


def _plate_integral(
    plate: Plate,
    kernel: Callable[[float, float, float], float],
    r: float,
    tolerance: float,
    label: str,
) -> float:
    outer_radius, inner_radius, surface_density, _ = plate

    def over_rho(theta: float) -> float:
        peak = r * math.cos(theta)
        return _inner(lambda rho: kernel(rho, theta, peak), inner_radius, outer_radius, peak, tolerance)

    return 2.0 * surface_density * _outer(over_rho, tolerance / (2.0 * surface_density), label)


class QuadratureOracleService:
    """
    Domain Service: reference potentials and gradients by nested adaptive quadrature.

    Slow by construction; used to validate the closed forms, never on the
    dynamics hot path.
    """

    @staticmethod
    def potential(bodies: Body, point: FieldPoint, tolerance: float = OracleSettings.ABSOLUTE_TOLERANCE) -> float:
        """
        Reference potential of a wire, disk, annulus or stack.

        Raises:
            SingularityError: On a wire or an edge circle
            ConvergenceError: If the tolerance is not reached within the subdivision budget
        """
        r = point.r
        z = point.z
        if isinstance(bodies, WireBody):
            if z == 0.0 and r == bodies.a:
                raise SingularityError("Oracle evaluation on the wire")
            a = bodies.a
            value = _outer(lambda theta: 1.0 / _distance(a, theta, r, z), tolerance * math.pi / bodies.mu, "wire")
            return -bodies.mu / math.pi * value

        plates = _plates(bodies)
        if z == 0.0 and any(r == edge for plate in plates for edge in plate[:2] if edge > 0.0):
            raise SingularityError(f"Oracle evaluation on an edge circle at r = {r!r}")
        share = tolerance / len(plates)

        def kernel(rho: float, theta: float, _peak: float) -> float:
            return rho / _distance(rho, theta, r, z)

        return -sum(_plate_integral(plate, kernel, r, share, "plate potential") for plate in plates)

    @staticmethod
    def gradient(
        bodies: Body, point: FieldPoint, tolerance: float = OracleSettings.ABSOLUTE_TOLERANCE
    ) -> tuple[float, float, float]:
        """
        Reference gradient by differentiation under the integral sign.

        Raises:
            SingularityError: On a wire
            FieldDiscontinuityError: On a plate
            ConvergenceError: If the tolerance is not reached
        """
        r = point.r
        z = point.z
        if isinstance(bodies, WireBody):
            if z == 0.0 and r == bodies.a:
                raise SingularityError("Oracle evaluation on the wire")
            a = bodies.a
            scale = bodies.mu / math.pi
            d_r = scale * _outer(
                lambda theta: (r - a * math.cos(theta)) / _distance(a, theta, r, z) ** 3, tolerance / scale, "wire"
            )
            d_z = scale * _outer(lambda theta: z / _distance(a, theta, r, z) ** 3, tolerance / scale, "wire")
        else:
            plates = _plates(bodies)
            if z == 0.0:
                for plate in plates:
                    if plate[1] <= r <= plate[0]:
                        raise FieldDiscontinuityError(
                            f"Oracle gradient requested on a plate at r = {r!r}", normal_jump=plate[3]
                        )
            share = tolerance / len(plates)

            def radial_kernel(rho: float, theta: float, _peak: float) -> float:
                return rho * (r - rho * math.cos(theta)) / _distance(rho, theta, r, z) ** 3

            def vertical_kernel(rho: float, theta: float, _peak: float) -> float:
                return rho * z / _distance(rho, theta, r, z) ** 3

            d_r = sum(_plate_integral(plate, radial_kernel, r, share, "radial field") for plate in plates)
            d_z = 0.0
            if z != 0.0:
                d_z = sum(_plate_integral(plate, vertical_kernel, r, share, "vertical field") for plate in plates)

        if r == 0.0:
            return 0.0, 0.0, d_z
        return d_r * point.x / r, d_r * point.y / r, d_z
