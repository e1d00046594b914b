"""
annulus-dyn - Main Application Entry Point

This module wires repositories, application services and event handlers
and runs the annulus-dyn command line.
"""

import sys

from config import pdict  # Serves as the project configuration dictionary.
from src.shared.infrastructure.logging_config import get_logger, setup_logging

from src.cli.views import CommandLineView
from src.cli.domain.value_objects import RunConfig
from src.cli.application.event_handlers import (
    CommandCompletedEventHandler,
    EquilibriumEventHandler,
    TrajectoryEventHandler,
)
from src.cli.application.services import (
    BifurcationCommandService,
    CommandService,
    EquilibriaCommandService,
    EvalCommandService,
    OrbitCommandService,
    PortraitCommandService,
    RunConfigService,
)
from src.cli.infrastructure.repositories import JSONConfigRepository, RunOutputRepository
from src.dynamics.domain.events import TrajectoryTerminatedEvent
from src.equilibria.domain.events import (
    BifurcationLocatedEvent,
    CriticalPointLocatedEvent,
    GapParityViolatedEvent,
)
from src.shared.domain.events import CommandCompletedEvent, IDomainEventPublisher
from src.shared.infrastructure.event_bus import InMemoryEventBus

logger = get_logger(__name__)

COMMAND_SERVICES: dict[str, type[CommandService]] = {
    "eval": EvalCommandService,
    "portrait": PortraitCommandService,
    "equilibria": EquilibriaCommandService,
    "bifurcation": BifurcationCommandService,
    "orbit": OrbitCommandService,
}


def setup_event_handlers(event_bus: IDomainEventPublisher):
    """
    Setup event handlers for domain events.
    """
    # Subscribe handlers for equilibria events.
    event_bus.subscribe(CriticalPointLocatedEvent, EquilibriumEventHandler.handle_critical_point)
    event_bus.subscribe(GapParityViolatedEvent, EquilibriumEventHandler.handle_gap_parity)
    event_bus.subscribe(BifurcationLocatedEvent, EquilibriumEventHandler.handle_bifurcation)

    # Subscribe handlers for dynamics and command events.
    event_bus.subscribe(TrajectoryTerminatedEvent, TrajectoryEventHandler.handle)
    event_bus.subscribe(CommandCompletedEvent, CommandCompletedEventHandler.handle)


def service_factory(event_bus: IDomainEventPublisher):
    """
    Factory of the application service that runs a resolved configuration.

    Returns:
        Callable building a CommandService with its output repository.
    """
    program = f"{pdict['program']} {pdict['version']}"

    def build(config: RunConfig) -> CommandService:
        repository = RunOutputRepository(config.output, pdict["config_suffix"])
        return COMMAND_SERVICES[config.command](repository=repository, event_bus=event_bus, program=program)

    return build


def build_view(event_bus: IDomainEventPublisher) -> CommandLineView:
    """
    Setup repositories and services behind the command line view.
    """
    config_repository = JSONConfigRepository(pdict["config_dir_env"], pdict["config_file"])
    run_config_service = RunConfigService(config_repository, pdict["output_names"], event_bus)
    return CommandLineView(
        run_config_service=run_config_service,
        service_factory=service_factory(event_bus),
        program=pdict["program"],
        version=pdict["version"],
    )


def main():
    """
    Main: Runs the annulus-dyn command line and exits with its status code.
    """
    # Setup logging configuration; --log-level replaces it once parsed.
    setup_logging()

    # Initialize Domain Event Bus (infrastructure implementation).
    event_bus: IDomainEventPublisher = InMemoryEventBus()
    setup_event_handlers(event_bus)

    view = build_view(event_bus)
    sys.exit(view.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
