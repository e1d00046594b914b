"""
Unit Tests for TrajectoryIntegrationService.

Test categories:
- Terminal events (plate collision, escape, time limit through the hole)
- Conservation laws and time reversibility
- Reduced against Cartesian integration
- Preconditions
"""

import numpy as np
import pytest

from src.dynamics.domain.services import CircularOrbitService, TrajectoryIntegrationService
from src.dynamics.domain.value_objects import CartesianState, IntegrationSettings, ReducedState
from src.shared.domain.enums import TerminationReason
from src.shared.domain.exceptions import PreconditionError


class TestTerminalEvents:
    """Tests for the event handling."""

    def test_fall_onto_plate(self, reference_annulus):
        """A particle released above the plate collides with it."""
        state = CartesianState(0.9, 0.0, 0.3, 0.0, 0.0, 0.0)
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 20.0)
        assert trajectory.reason is TerminationReason.PLATE_COLLISION
        assert trajectory.final_time < 20.0
        assert abs(trajectory.final_state[2]) < 1e-9

    def test_fall_through_hole(self, reference_annulus):
        """Crossing the plane inside the hole continues the integration."""
        state = CartesianState(0.1, 0.0, 0.5, 0.0, 0.0, 0.0)
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 2.5)
        assert trajectory.reason is TerminationReason.TIME_LIMIT
        assert trajectory.segments >= 2
        assert trajectory.final_time == pytest.approx(2.5)
        assert np.min(trajectory.heights()) < 0.0

    @pytest.mark.parametrize(
        "state",
        [
            CartesianState(0.1, 0.0, 0.5, 0.02, 0.0, 0.0),
            CartesianState(0.1, 0.0, 0.5, -0.02, 0.01, 0.0),
            CartesianState(0.0, 0.1, -0.5, 0.0, -0.02, 0.1),
        ],
    )
    def test_hole_crossing_with_in_plane_velocity(self, reference_annulus, state):
        """The crossing restarts once whatever the sign of the in-plane velocity."""
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 2.5)
        assert trajectory.reason is TerminationReason.TIME_LIMIT
        assert 2 <= trajectory.segments <= 3
        heights = trajectory.heights()
        assert np.min(heights) < 0.0 < np.max(heights)

    def test_reduced_hole_crossing(self, reference_annulus):
        """The reduced layout restarts through the hole as well."""
        state = ReducedState(0.1, 0.0, 0.5, 0.0, 0.01)
        trajectory = TrajectoryIntegrationService.integrate_reduced(reference_annulus, state, 2.5)
        assert trajectory.reason is TerminationReason.TIME_LIMIT
        assert trajectory.segments >= 2
        assert np.min(trajectory.heights()) < 0.0

    def test_escape(self, reference_annulus):
        """Positive energy and an outward velocity escape."""
        state = CartesianState(2.0, 0.0, 0.0, 3.0, 0.0, 0.0)
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 100.0)
        assert trajectory.reason is TerminationReason.ESCAPE
        assert trajectory.radii()[-1] == pytest.approx(50.0, rel=1e-6)

    def test_sample_times_are_respected(self, reference_annulus):
        """Requested sample times come from the dense output."""
        state = CartesianState(3.0, 0.0, 0.0, 0.0, 0.55, 0.0)
        samples = np.linspace(0.0, 5.0, 11)
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 5.0, sample_times=samples)
        assert trajectory.times == pytest.approx(samples)


class TestConservation:
    """Energy and angular momentum along orbits."""

    @pytest.mark.slow
    def test_circular_orbit_returns(self, reference_annulus):
        """The circular orbit at r0 = 3 closes after one period."""
        angular_momentum, state = CircularOrbitService.state(reference_annulus, 3.0)
        period = CircularOrbitService.period(3.0, angular_momentum)
        trajectory = TrajectoryIntegrationService.integrate(
            reference_annulus, state, period, sample_times=np.array([0.0, period])
        )
        assert trajectory.final_state == pytest.approx(state.as_array(), abs=1e-8)
        assert np.max(np.abs(trajectory.radii() - 3.0)) < 1e-9

    @pytest.mark.slow
    @pytest.mark.parametrize("r0", [3.0, 6.0, 12.0])
    def test_circular_orbit_over_ten_periods(self, reference_annulus, r0):
        """The radius stays at r0 to 1e-9 relative over ten periods."""
        angular_momentum, state = CircularOrbitService.state(reference_annulus, r0)
        period = CircularOrbitService.period(r0, angular_momentum)
        samples = np.linspace(0.0, 10.0 * period, 201)
        trajectory = TrajectoryIntegrationService.integrate(
            reference_annulus, state, 10.0 * period, sample_times=samples
        )
        assert trajectory.reason is TerminationReason.TIME_LIMIT
        assert np.max(np.abs(trajectory.radii() - r0)) / r0 < 1e-9
        assert np.max(np.abs(trajectory.heights())) == 0.0

    @pytest.mark.slow
    def test_energy_drift(self, reference_annulus):
        """Relative energy drift stays below 1e-9 over 100 time units."""
        state = CartesianState(3.0, 0.0, 0.5, 0.0, 0.55, 0.05)
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 100.0)
        assert trajectory.reason is TerminationReason.TIME_LIMIT
        assert trajectory.energy_drift < 1e-9
        assert trajectory.angular_momentum_drift < 1e-9

    @pytest.mark.slow
    def test_reduced_matches_cartesian(self, reference_annulus):
        """Both formulations give the same (r, z) history."""
        cartesian = CartesianState(3.0, 0.0, 0.5, 0.0, 0.58, 0.0)
        reduced = ReducedState.from_cartesian(cartesian)
        samples = np.linspace(0.0, 10.0, 21)
        full = TrajectoryIntegrationService.integrate(reference_annulus, cartesian, 10.0, sample_times=samples)
        short = TrajectoryIntegrationService.integrate_reduced(reference_annulus, reduced, 10.0, sample_times=samples)
        assert short.is_reduced
        assert short.times == pytest.approx(full.times)
        assert short.radii() == pytest.approx(full.radii(), abs=1e-6)
        assert short.heights() == pytest.approx(full.heights(), abs=1e-6)


class TestPreconditions:
    """Tests for rejected starts."""

    def test_start_on_plate(self, reference_annulus):
        """A particle may not start on a plate."""
        with pytest.raises(PreconditionError):
            TrajectoryIntegrationService.integrate(
                reference_annulus, CartesianState(0.9, 0.0, 0.0, 0.0, 1.0, 0.0), 1.0
            )

    def test_non_positive_end_time(self, reference_annulus):
        """The final time must be positive."""
        with pytest.raises(PreconditionError):
            TrajectoryIntegrationService.integrate_reduced(
                reference_annulus, ReducedState(2.0, 0.0, 0.5, 0.0, 1.0), 0.0
            )

    def test_custom_settings(self, reference_annulus):
        """Looser tolerances still terminate on the plate."""
        state = CartesianState(0.9, 0.0, 0.3, 0.0, 0.0, 0.0)
        settings = IntegrationSettings(rtol=1e-9, atol=1e-9)
        trajectory = TrajectoryIntegrationService.integrate(reference_annulus, state, 20.0, settings)
        assert trajectory.reason is TerminationReason.PLATE_COLLISION


@pytest.mark.slow
class TestReversibility:
    """Forward then backward integration returns to the start."""

    @pytest.mark.parametrize(
        "state",
        [
            CartesianState(3.0, 0.0, 0.5, 0.0, 0.55, 0.05),
            CartesianState(2.0, 1.0, -0.3, -0.2, 0.6, 0.0),
            CartesianState(1.5, 0.0, 0.0, 0.0, 0.8, 0.0),
        ],
    )
    def test_reversed_flow_retraces_orbit(self, reference_annulus, state):
        """Integrating the reversed final state for the same time recovers the reversed start."""
        t_end = 10.0
        forward = TrajectoryIntegrationService.integrate(reference_annulus, state, t_end)
        assert forward.reason is TerminationReason.TIME_LIMIT
        turned = CartesianState.from_sequence(forward.final_state).reversed()
        backward = TrajectoryIntegrationService.integrate(reference_annulus, turned, t_end)
        assert backward.reason is TerminationReason.TIME_LIMIT
        assert backward.final_state == pytest.approx(state.reversed().as_array(), abs=1e-7)
