"""
Centralized Logging Configuration Module.

This module configures logging for the annulus-dyn library and command line.
Logs go to stdout; result tables go to files.
"""

import sys
import logging

from src.shared.domain.exceptions import ConfigurationError

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def resolve_level(level: int | str) -> int:
    """
    Turn a level name such as "debug" or "WARNING" into its numeric value.

    Raises:
        ConfigurationError: If the name is not a standard logging level
    """
    if isinstance(level, int):
        return level
    numeric = logging.getLevelName(str(level).upper())
    if not isinstance(numeric, int):
        raise ConfigurationError(f"Unknown log level '{level}'")
    return numeric


def setup_logging(level: int | str = logging.INFO):
    """
    Configure the root logger with standard formatting.

    Calling it again replaces the previous handler, so the command line can
    apply --log-level after the defaults were set.

    Args:
        level: Logging level or level name (default: logging.INFO)
    """
    logging.basicConfig(
        level=resolve_level(level),
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        handlers=[logging.StreamHandler(sys.stdout)],
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    """
    Get a configured logger for the given module.

    Args:
        name: The name of the logger (typically __name__)

    Returns:
        logging.Logger: Configured logger instance
    """
    return logging.getLogger(name)
