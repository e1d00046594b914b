"""
CLI Application Base Command Service.
"""

from abc import abstractmethod
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor

from src.cli.application.dtos import CommandResultDTO
from src.cli.domain.value_objects import RunConfig
from src.cli.infrastructure.repositories import RunOutputRepository
from src.dynamics.domain.value_objects import IntegrationSettings
from src.shared.application.services import BaseService
from src.shared.domain.events import CommandCompletedEvent, IDomainEventPublisher
from src.shared.domain.exceptions import ConfigurationError
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


def float_parameter(config: RunConfig, name: str, default: float | None = None) -> float:
    """
    A numeric command parameter.

    Raises:
        ConfigurationError: If the parameter is missing without default or not a number
    """
    value = config.parameter(name, default)
    if value is None:
        raise ConfigurationError(f"Command {config.command} needs parameter '{name}'")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigurationError(f"Parameter '{name}' must be a number, got {value!r}")
    return float(value)


def float_list_parameter(config: RunConfig, name: str, default: list | None = None) -> list[float] | None:
    """A numeric list parameter; a single number is read as a one-element list."""
    value = config.parameter(name, default)
    if value is None:
        return None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [float(value)]
    numeric = isinstance(value, list) and all(
        isinstance(item, (int, float)) and not isinstance(item, bool) for item in value
    )
    if not numeric:
        raise ConfigurationError(f"Parameter '{name}' must be a list of numbers, got {value!r}")
    return [float(item) for item in value]


class CommandService(BaseService):
    """
    Base Application Service for one command-line command.

    Coordinates workflow:
    1. Run the command's use case (_run)
    2. Write the resolved configuration next to the outputs
    3. Publish CommandCompletedEvent
    4. Return a CommandResultDTO

    Fan-out work goes through `_map`, which keeps input order for any number
    of worker threads so that outputs do not depend on the thread count.
    """

    command = ""

    def __init__(
        self,
        repository: RunOutputRepository,
        event_bus: IDomainEventPublisher | None = None,
        program: str = "annulus-dyn",
    ):
        super().__init__(repository, event_bus)
        self._program = program

    def execute(self, config: RunConfig) -> CommandResultDTO:
        """
        Use case: run the command described by a resolved configuration.

        Raises:
            ConfigurationError: If the configuration belongs to another command or is invalid
        """
        if config.command != self.command:
            raise ConfigurationError(f"{type(self).__name__} cannot run command {config.command!r}")
        logger.info("Running %s on %s", self.command, config.body.get("type"))
        outputs, summary = self._run(config)
        record = {key: value for key, value in config.to_dict().items() if key != "threads"}
        outputs.append(str(self._repository.save_config(record)))
        self.publish(CommandCompletedEvent(command=self.command, outputs=tuple(outputs)))
        return CommandResultDTO(command=self.command, outputs=tuple(outputs), summary=summary)

    @abstractmethod
    def _run(self, config: RunConfig) -> tuple[list[str], dict]:
        """Compute and write the command's data; return written paths and a summary."""

    def _metadata(self, config: RunConfig) -> dict:
        """Provenance header of every data file."""
        return {"program": self._program, **config.provenance()}

    @staticmethod
    def _map(function: Callable, items: Iterable, threads: int) -> list:
        """function over items, in input order, on up to `threads` workers."""
        items = list(items)
        if threads <= 1 or len(items) <= 1:
            return [function(item) for item in items]
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(function, items))

    @staticmethod
    def _integration_settings(config: RunConfig) -> IntegrationSettings:
        return IntegrationSettings(rtol=config.tolerances.rtol, atol=config.tolerances.atol)
