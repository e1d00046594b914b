"""
src.cli.infrastructure.repositories - CLI Infrastructure Repositories module.
"""

from .json_config_repository import JSONConfigRepository
from .run_output_repository import CONFIG_SUFFIX, RunOutputRepository

__all__ = [
    "CONFIG_SUFFIX",
    "JSONConfigRepository",
    "RunOutputRepository",
]
