"""
CLI Application Service for resolving run configurations.
"""

from src.cli.domain.value_objects import RunConfig
from src.cli.infrastructure.repositories import JSONConfigRepository
from src.shared.application.services import BaseService
from src.shared.domain.events import IDomainEventPublisher
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


class RunConfigService(BaseService):
    """
    Application Service: merge a configuration file with command-line overrides.

    Flags win over the file; a command without any output path gets its
    default output name.
    """

    def __init__(
        self,
        repository: JSONConfigRepository,
        output_names: dict[str, str],
        event_bus: IDomainEventPublisher | None = None,
    ):
        super().__init__(repository, event_bus)
        self._output_names = dict(output_names)

    def resolve(self, config_path: str | None, overrides: dict) -> RunConfig:
        """
        Use case: build the run configuration.

        Args:
            config_path: --config value, or None for the default lookup
            overrides: Values given on the command line (None entries are ignored)

        Raises:
            ConfigurationError: If the file or the merged configuration is invalid
        """
        record = self._repository.load(config_path)
        command = overrides.get("command") or record.get("command")
        if "output" not in record and overrides.get("output") is None and command in self._output_names:
            record = {**record, "output": self._output_names[command]}
        config = RunConfig.resolve(record, overrides)
        logger.debug("Resolved configuration: %s", config.to_dict())
        return config
