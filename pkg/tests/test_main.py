"""
Unit Tests for the composition root.

Test categories:
- Service factory tests
- Event handler wiring tests
"""

from unittest.mock import Mock

import main
from src.cli.application.services import EquilibriaCommandService, OrbitCommandService
from src.cli.domain.value_objects import RunConfig
from src.cli.views import CommandLineView
from src.dynamics.domain.events import TrajectoryTerminatedEvent
from src.shared.domain.events import CommandCompletedEvent
from src.shared.infrastructure.event_bus import InMemoryEventBus


class TestServiceFactory:
    """Tests for service_factory."""

    def test_service_per_command(self, tmp_path):
        """Each command gets its own service writing to the configured output."""
        build = main.service_factory(InMemoryEventBus())

        orbit = build(RunConfig(command="orbit", output=str(tmp_path / "orbit.csv")))
        equilibria = build(RunConfig(command="equilibria", output=str(tmp_path / "e.json")))

        assert isinstance(orbit, OrbitCommandService)
        assert isinstance(equilibria, EquilibriaCommandService)
        assert orbit.repository.output == tmp_path / "orbit.csv"

    def test_every_command_has_a_service(self):
        """The dispatch table covers all commands."""
        assert set(main.COMMAND_SERVICES) == {"eval", "portrait", "equilibria", "bifurcation", "orbit"}


class TestWiring:
    """Tests for setup_event_handlers and build_view."""

    def test_handlers_subscribed(self):
        """Trajectory and command events have handlers."""
        bus = Mock()
        main.setup_event_handlers(bus)

        subscribed = {call.args[0] for call in bus.subscribe.call_args_list}
        assert TrajectoryTerminatedEvent in subscribed
        assert CommandCompletedEvent in subscribed
        assert len(subscribed) == 5

    def test_build_view(self):
        """The view carries the program name and version."""
        view = main.build_view(InMemoryEventBus())

        assert isinstance(view, CommandLineView)
        assert view.program == "annulus-dyn"
        assert view.version == "1.0.0"
