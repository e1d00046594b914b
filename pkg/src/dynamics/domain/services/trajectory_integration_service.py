"""
Domain Service for Trajectory Integration.

Orbits are propagated with an embedded Runge-Kutta pair (DOP853 by default)
and terminal events:

- plate collision: z = 0 crossed with r inside a collision band [b - eps, a + eps]
- escape: R beyond escape_factor * outermost radius while E >= 0
- edge proximity: distance to an edge circle below the proximity threshold

A z = 0 crossing outside every band is not a collision; the solver is
restarted from the crossing with the event direction flipped so the restart
point itself does not re-trigger. Starts with z = zdot = 0 integrate the
planar subsystem, so such orbits stay in z = 0 exactly.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from src.dynamics.domain.services.equations_of_motion_service import EquationsOfMotionService, cylindrical_force
from src.dynamics.domain.value_objects import CartesianState, IntegrationSettings, ReducedState, Trajectory
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack, FieldPoint
from src.shared.domain.enums import TerminationReason
from src.shared.domain.exceptions import IntegrationFailureError, PreconditionError
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)

EventFunction = Callable[[float, np.ndarray], float]


@dataclass(frozen=True)
class _System:
    """Solver-facing description of one of the four equation layouts."""

    rhs: Callable[[float, np.ndarray], np.ndarray]
    radius: Callable[[np.ndarray], float]
    expand: Callable[[np.ndarray], np.ndarray]
    height_index: int | None
    vertical_index: int | None
    reduced: bool


def _event(function: EventFunction, direction: float) -> EventFunction:
    function.terminal = True
    function.direction = direction
    return function


def _cartesian_system(stack: BodyStack, planar: bool) -> _System:
    if planar:

        def rhs(_t, y):
            r = math.hypot(y[0], y[1])
            d_r = StackPotentialService.planar_derivative(stack, r)
            scale = d_r / r if r > 0.0 else 0.0
            return np.array([y[2], y[3], -scale * y[0], -scale * y[1]])

        return _System(
            rhs=rhs,
            radius=lambda y: math.hypot(y[0], y[1]),
            expand=lambda y: np.array([y[0], y[1], 0.0, y[2], y[3], 0.0]),
            height_index=None,
            vertical_index=None,
            reduced=False,
        )

    def rhs(_t, y):
        r = math.hypot(y[0], y[1])
        d_r, d_z = cylindrical_force(stack, r, y[2])
        scale = d_r / r if r > 0.0 else 0.0
        return np.array([y[3], y[4], y[5], -scale * y[0], -scale * y[1], -d_z])

    return _System(
        rhs=rhs,
        radius=lambda y: math.hypot(y[0], y[1]),
        expand=lambda y: np.array(y, dtype=float),
        height_index=2,
        vertical_index=5,
        reduced=False,
    )


def _reduced_system(stack: BodyStack, angular_momentum: float, planar: bool) -> _System:
    squared = angular_momentum * angular_momentum
    if planar:

        def rhs(_t, y):
            d_r = StackPotentialService.planar_derivative(stack, y[0])
            return np.array([y[1], -d_r + squared / y[0] ** 3])

        return _System(
            rhs=rhs,
            radius=lambda y: y[0],
            expand=lambda y: np.array([y[0], y[1], 0.0, 0.0]),
            height_index=None,
            vertical_index=None,
            reduced=True,
        )

    def rhs(_t, y):
        d_r, d_z = cylindrical_force(stack, y[0], y[2])
        return np.array([y[1], -d_r + squared / y[0] ** 3, y[3], -d_z])

    return _System(
        rhs=rhs,
        radius=lambda y: y[0],
        expand=lambda y: np.array(y, dtype=float),
        height_index=2,
        vertical_index=3,
        reduced=True,
    )


class TrajectoryIntegrationService:
    """
    Domain Service: event-aware propagation of Cartesian and reduced states.
    """

    @staticmethod
    def integrate(
        bodies: AnnulusBody | BodyStack,
        state: CartesianState,
        t_end: float,
        settings: IntegrationSettings | None = None,
        sample_times: np.ndarray | None = None,
    ) -> Trajectory:
        """
        Propagate a Cartesian state from t = 0 to t_end or the first terminal event.

        Args:
            bodies: Annulus or stack
            state: Initial state, off every plate
            t_end: Final time (> 0)
            settings: Tolerances and event thresholds
            sample_times: Optional output times in [0, t_end] taken from the dense
                output; by default every accepted step is returned

        Returns:
            Trajectory: Cartesian samples with energy and angular momentum

        Raises:
            PreconditionError: If the initial position lies on a plate or t_end <= 0
            IntegrationFailureError: If the solver cannot continue
        """
        stack = BodyStack.coerce(bodies)
        settings = settings or IntegrationSettings()
        _check_start(stack, math.hypot(state.x, state.y), state.z, t_end)
        energy = EquationsOfMotionService.energy(stack, state)

        if state.is_planar:
            system = _cartesian_system(stack, planar=True)
            y0 = np.array([state.x, state.y, state.vx, state.vy])
        else:
            system = _cartesian_system(stack, planar=False)
            y0 = state.as_array()
        return _propagate(stack, system, y0, state.vz, energy, t_end, settings, sample_times, None)

    @staticmethod
    def integrate_reduced(
        bodies: AnnulusBody | BodyStack,
        state: ReducedState,
        t_end: float,
        settings: IntegrationSettings | None = None,
        sample_times: np.ndarray | None = None,
    ) -> Trajectory:
        """
        Propagate a reduced state (r, rdot, z, zdot) at fixed Lambda.

        Raises:
            PreconditionError: If the initial position lies on a plate or t_end <= 0
            IntegrationFailureError: If the solver cannot continue or r reaches the axis
        """
        stack = BodyStack.coerce(bodies)
        settings = settings or IntegrationSettings()
        _check_start(stack, state.r, state.z, t_end)
        energy = EquationsOfMotionService.reduced_energy(stack, state)

        system = _reduced_system(stack, state.angular_momentum, planar=state.is_planar)
        y0 = state.as_array()[:2] if state.is_planar else state.as_array()
        return _propagate(stack, system, y0, state.zdot, energy, t_end, settings, sample_times, state.angular_momentum)


def _check_start(stack: BodyStack, r: float, z: float, t_end: float) -> None:
    if not t_end > 0.0:
        raise PreconditionError(f"Final time must be positive, got {t_end!r}")
    if z == 0.0 and stack.member_covering(r) is not None:
        raise PreconditionError(f"Initial position r = {r!r}, z = 0 lies on a plate")


def _build_events(
    stack: BodyStack,
    system: _System,
    crossing_direction: float,
    energy: float,
    settings: IntegrationSettings,
) -> list[tuple[TerminationReason | str | None, EventFunction]]:
    events: list[tuple[TerminationReason | str | None, EventFunction]] = []
    height = system.height_index
    radius = system.radius

    if height is None:
        # Reaching a plate rim inside the plane is a collision.
        for member in stack.annuli:
            inner = member.b - settings.collision_margin
            outer = member.a + settings.collision_margin
            events.append(
                (
                    TerminationReason.PLATE_COLLISION,
                    _event(lambda _t, y, lo=inner, hi=outer: (radius(y) - lo) * (radius(y) - hi), 0.0),
                )
            )
    else:
        events.append((None, _event(lambda _t, y: y[height], crossing_direction)))
        edges = stack.edge_radii
        proximity = settings.edge_proximity
        events.append(
            (
                TerminationReason.EDGE_PROXIMITY,
                _event(lambda _t, y: min(math.hypot(radius(y) - c, y[height]) for c in edges) - proximity, -1.0),
            )
        )

    if energy >= 0.0:
        limit = settings.escape_factor * stack.outer_radius

        def distance(_t, y):
            z = 0.0 if height is None else y[height]
            return math.hypot(radius(y), z) - limit

        events.append((TerminationReason.ESCAPE, _event(distance, 1.0)))

    if system.reduced:
        events.append(("axis", _event(lambda _t, y: y[0], -1.0)))
    return events


def _propagate(
    stack: BodyStack,
    system: _System,
    y0: np.ndarray,
    vertical_speed: float,
    energy: float,
    t_end: float,
    settings: IntegrationSettings,
    sample_times: np.ndarray | None,
    angular_momentum: float | None,
) -> Trajectory:
    if system.height_index is not None:
        height = y0[system.height_index]
        if height > 0.0 or (height == 0.0 and vertical_speed > 0.0):
            direction = -1.0
        else:
            direction = 1.0
    else:
        direction = 0.0

    samples = None if sample_times is None else np.sort(np.asarray(sample_times, dtype=float))
    times: list[float] = []
    rows: list[np.ndarray] = []
    t_start = 0.0
    y_start = np.array(y0, dtype=float)
    reason = TerminationReason.TIME_LIMIT
    segments = 0

    while True:
        segments += 1
        if segments > settings.max_segments:
            raise IntegrationFailureError(
                f"More than {settings.max_segments} plane crossings before t = {t_end!r}",
                last_time=times[-1],
                last_state=tuple(rows[-1]),
            )
        events = _build_events(stack, system, direction, energy, settings)
        solution = integrate.solve_ivp(
            system.rhs,
            (t_start, t_end),
            y_start,
            method=settings.method,
            rtol=settings.rtol,
            atol=settings.atol,
            events=[function for _, function in events],
            dense_output=samples is not None,
        )
        if solution.status == -1:
            raise IntegrationFailureError(
                f"Integrator failed at t = {solution.t[-1]!r}: {solution.message}",
                last_time=float(solution.t[-1]),
                last_state=tuple(system.expand(solution.y[:, -1])),
            )

        _collect(solution, system, samples, times, rows)
        if solution.status == 0:
            break

        triggered = next(index for index, hits in enumerate(solution.t_events) if len(hits) > 0)
        kind = events[triggered][0]
        event_state = np.array(solution.y_events[triggered][0], dtype=float)
        if kind == "axis":
            raise IntegrationFailureError(
                "Reduced coordinates reached the symmetry axis; integrate this orbit in Cartesian form",
                last_time=float(solution.t_events[triggered][0]),
                last_state=tuple(system.expand(event_state)),
            )
        if kind is not None:
            reason = kind
            break

        # Plane crossing: collision inside a band, otherwise restart through the plane.
        r = system.radius(event_state)
        if stack.member_covering(r, settings.collision_margin) is not None:
            reason = TerminationReason.PLATE_COLLISION
            break
        vertical = event_state[system.vertical_index]
        direction = 1.0 if vertical < 0.0 else -1.0
        event_state[system.height_index] = 0.0
        t_start = float(solution.t_events[triggered][0])
        y_start = event_state
        if t_start >= t_end:
            break

    times_array = np.array(times)
    states = np.vstack(rows)
    trajectory = _finish(stack, times_array, states, reason, segments, angular_momentum)
    logger.info(
        "Trajectory terminated (%s) at t=%.6g after %d segment(s), %d samples",
        reason.value,
        trajectory.final_time,
        segments,
        times_array.size,
    )
    return trajectory


def _collect(solution, system: _System, samples: np.ndarray | None, times: list[float], rows: list[np.ndarray]):
    last = times[-1] if times else -math.inf
    if samples is None:
        for t, y in zip(solution.t, solution.y.T, strict=True):
            if t > last:
                times.append(float(t))
                rows.append(system.expand(y))
                last = t
        return

    segment_end = float(solution.t[-1])
    if times:
        inside = samples[(samples > last) & (samples <= segment_end)]
    else:
        inside = samples[(samples >= solution.t[0]) & (samples <= segment_end)]
    for t in inside:
        times.append(float(t))
        rows.append(system.expand(solution.sol(t)))
    if not times or segment_end > times[-1]:
        times.append(segment_end)
        rows.append(system.expand(solution.y[:, -1]))


def _finish(
    stack: BodyStack,
    times: np.ndarray,
    states: np.ndarray,
    reason: TerminationReason,
    segments: int,
    angular_momentum: float | None,
) -> Trajectory:
    if angular_momentum is None:
        potentials = np.array([StackPotentialService.potential(stack, FieldPoint(*row[:3])) for row in states])
        kinetic = 0.5 * np.sum(states[:, 3:] ** 2, axis=1)
        momenta = states[:, 0] * states[:, 4] - states[:, 1] * states[:, 3]
    else:
        potentials = np.array(
            [StackPotentialService.potential(stack, FieldPoint.cylindrical(row[0], row[2])) for row in states]
        )
        kinetic = 0.5 * (states[:, 1] ** 2 + angular_momentum**2 / states[:, 0] ** 2 + states[:, 3] ** 2)
        momenta = np.full(times.shape, angular_momentum)
    return Trajectory(times, states, reason, kinetic + potentials, momenta, segments)
