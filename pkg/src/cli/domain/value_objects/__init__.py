"""
src.cli.domain.value_objects - CLI Value Objects module.
"""

from .body_spec import body_from_spec
from .grid_axis import AXIS_NAMES, GridAxis
from .run_config import COMMANDS, DEFAULT_BODY, RunConfig, merge_records
from .tolerances import Tolerances

__all__ = [
    "AXIS_NAMES",
    "COMMANDS",
    "DEFAULT_BODY",
    "GridAxis",
    "RunConfig",
    "Tolerances",
    "body_from_spec",
    "merge_records",
]
