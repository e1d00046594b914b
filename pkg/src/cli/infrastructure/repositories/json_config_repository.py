"""
CLI Infrastructure - JSON Config Repository.
"""

import os
from pathlib import Path

from src.shared.domain.exceptions import ConfigurationError
from src.shared.infrastructure import get_logger
from src.shared.infrastructure.repositories import JSONReportRepository

logger = get_logger(__name__)


class JSONConfigRepository:
    """
    Locates and loads run configuration files.

    Lookup:
    - an explicit path is used when it exists; a relative one that does not
      exist is looked up in the configuration directory
    - without a path, <config dir>/<default file> is used when it exists
    The configuration directory comes from an environment variable.
    """

    def __init__(self, directory_variable: str, default_file: str, environment: dict | None = None):
        """
        Args:
            directory_variable: Name of the environment variable holding the configuration directory
            default_file: File name looked up in that directory
            environment: Environment mapping, os.environ by default
        """
        self._directory_variable = directory_variable
        self._default_file = default_file
        self._environment = os.environ if environment is None else environment

    def directory(self) -> Path | None:
        """The configuration directory, if configured."""
        value = self._environment.get(self._directory_variable)
        return Path(value) if value else None

    def locate(self, path: str | None) -> Path | None:
        """
        Resolve the configuration file to load.

        Raises:
            ConfigurationError: If an explicit path cannot be found
        """
        directory = self.directory()
        if path is None:
            if directory is not None and (directory / self._default_file).is_file():
                return directory / self._default_file
            return None
        candidate = Path(path)
        if candidate.is_file():
            return candidate
        if not candidate.is_absolute() and directory is not None and (directory / candidate).is_file():
            return directory / candidate
        raise ConfigurationError(f"Configuration file not found: {path}")

    def load(self, path: str | None) -> dict:
        """
        The configuration record, empty when no file applies.

        Raises:
            ConfigurationError: If the file is missing or malformed
        """
        located = self.locate(path)
        if located is None:
            return {}
        logger.info("Loading configuration from %s", located)
        return JSONReportRepository(located).load()
