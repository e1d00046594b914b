"""
Domain Service for Motion Along the Symmetry Axis.

On the axis U(0, 0, z) = -sum 2 mu_i / S_i(z) with
S_i(z) = sqrt(a_i^2 + z^2) + sqrt(b_i^2 + z^2). Orbits with E* < E < 0
librate through the origin; E >= 0 escapes.
"""

import math

from scipy import integrate, optimize

from src.dynamics.domain.value_objects import IntegrationSettings
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack
from src.shared.domain.exceptions import ConvergenceError, PreconditionError
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)

HALF_PI = 0.5 * math.pi


def _check_energy(stack: BodyStack, energy: float) -> None:
    if not stack.origin_energy < energy < 0.0:
        raise PreconditionError(
            f"Axial libration requires E* < E < 0 with E* = {stack.origin_energy!r}, got E = {energy!r}"
        )


class AxialMotionService:
    """
    Domain Service: turning height, period and its ODE cross-check.
    """

    @staticmethod
    def harmonic_frequency(bodies: AnnulusBody | BodyStack) -> float:
        """omega with omega^2 = U''(0) on the axis = sum 2 mu_i / (a_i b_i (a_i + b_i))."""
        stack = BodyStack.coerce(bodies)
        return math.sqrt(sum(2.0 * m.mu / (m.a * m.b * (m.a + m.b)) for m in stack.annuli))

    @staticmethod
    def turning_height(bodies: AnnulusBody | BodyStack, energy: float) -> float:
        """
        z_t > 0 with U(0, 0, z_t) = E.

        U on the axis is above -mu_total / z, so [0, mu_total / |E|] brackets the root.

        Raises:
            PreconditionError: If E is outside (E*, 0)
        """
        stack = BodyStack.coerce(bodies)
        _check_energy(stack, energy)
        upper = stack.total_mu / abs(energy)
        return optimize.brentq(
            lambda z: StackPotentialService.axis_potential(stack, z) - energy,
            0.0,
            upper,
            xtol=1e-15,
            rtol=4.0 * 2.220446049250313e-16,
            maxiter=200,
        )

    @staticmethod
    def period(bodies: AnnulusBody | BodyStack, energy: float, tolerance: float = 1e-12) -> float:
        """
        Period of the axial libration at energy E.

        With z = z_t sin(theta) the integrand of T = 4 int_0^{z_t} dz / sqrt(2 (E - U))
        becomes smooth: E - U = (z_t^2 - z^2) sum 2 mu_i G_i / (S_i(z) S_i(z_t)) with
        G_i = 1/(A_i(z_t) + A_i(z)) + 1/(B_i(z_t) + B_i(z)), so

            T = 4 int_0^{pi/2} dtheta / sqrt(sum 4 mu_i G_i / (S_i(z) S_i(z_t)))

        Raises:
            PreconditionError: If E is outside (E*, 0)
            ConvergenceError: If quadrature misses the tolerance
        """
        stack = BodyStack.coerce(bodies)
        turning = AxialMotionService.turning_height(stack, energy)

        def weight(theta: float) -> float:
            z = turning * math.sin(theta)
            total = 0.0
            for member in stack.annuli:
                outer_t, inner_t = math.hypot(member.a, turning), math.hypot(member.b, turning)
                outer, inner = math.hypot(member.a, z), math.hypot(member.b, z)
                g_factor = 1.0 / (outer_t + outer) + 1.0 / (inner_t + inner)
                total += 4.0 * member.mu * g_factor / ((outer + inner) * (outer_t + inner_t))
            return 1.0 / math.sqrt(total)

        value, abserr = integrate.quad(weight, 0.0, HALF_PI, epsabs=0.0, epsrel=tolerance, limit=200)
        if abserr > max(tolerance * abs(value), 1e-300) * 10.0:
            raise ConvergenceError(f"Axial period quadrature error {abserr:.3e} too large")
        return 4.0 * value

    @staticmethod
    def return_time(
        bodies: AnnulusBody | BodyStack, energy: float, settings: IntegrationSettings | None = None
    ) -> float:
        """
        Period measured by integrating z'' = -U_z(0, 0, z) from the origin.

        The particle leaves z = 0 upward with zdot = sqrt(2 (E - E*)); the
        period is the first later upward crossing of z = 0.

        Raises:
            PreconditionError: If E is outside (E*, 0)
            ConvergenceError: If no return is found
        """
        settings = settings or IntegrationSettings()
        stack = BodyStack.coerce(bodies)
        _check_energy(stack, energy)
        speed = math.sqrt(2.0 * (energy - stack.origin_energy))

        def rhs(_t, y):
            return [y[1], -StackPotentialService.axis_derivative(stack, y[0])]

        def upward_crossing(_t, y):
            return y[0]

        upward_crossing.direction = 1.0

        harmonic_period = 2.0 * math.pi / AxialMotionService.harmonic_frequency(stack)
        horizon = 2.0 * harmonic_period
        for _ in range(12):
            solution = integrate.solve_ivp(
                rhs,
                (0.0, horizon),
                [0.0, speed],
                method=settings.method,
                rtol=settings.rtol,
                atol=settings.atol,
                events=upward_crossing,
            )
            returns = [t for t in solution.t_events[0] if t > 0.25 * harmonic_period]
            if returns:
                logger.debug("Axial return found after %d steps", solution.t.size)
                return float(returns[0])
            horizon *= 2.0
        raise ConvergenceError(f"No axial return found up to t = {horizon!r}")
