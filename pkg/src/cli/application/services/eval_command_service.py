"""
CLI Application Service for the `eval` command.
"""

import math

import numpy as np
import pandas as pd

from src.cli.application.services.command_service import CommandService
from src.cli.domain.value_objects import AXIS_NAMES, GridAxis, RunConfig
from src.potential.domain.services import PotentialFieldService, QuadratureOracleService
from src.potential.domain.value_objects import Body, FieldPoint
from src.shared.domain.exceptions import ConfigurationError

COLUMNS = ["x", "y", "z", "U", "Ux", "Uy", "Uz", "flags"]


def grid_axes(config: RunConfig) -> list[GridAxis]:
    """x, y, z axes of the evaluation grid; missing axes are fixed at 0."""
    axes = config.parameter("axes", {})
    if not isinstance(axes, dict):
        raise ConfigurationError("Parameter 'axes' must map axis names to [start, stop, count]")
    unknown = set(axes) - set(AXIS_NAMES)
    if unknown:
        raise ConfigurationError(f"Unknown grid axis name(s): {', '.join(sorted(unknown))}")
    return [GridAxis.from_list(name, axes[name]) if name in axes else GridAxis(name, 0.0, 0.0) for name in AXIS_NAMES]


def _row(body: Body, x: float, y: float, z: float, oracle_tolerance: float | None) -> list:
    sample = PotentialFieldService.field_sample(body, FieldPoint(x, y, z))
    gradient = sample.gradient or (math.nan, math.nan, math.nan)
    potential = math.nan if sample.potential is None else sample.potential
    row = [x, y, z, potential, *gradient, sample.flags]
    if oracle_tolerance is not None:
        oracle = math.nan
        if not sample.on_edge:
            oracle = QuadratureOracleService.potential(body, FieldPoint(x, y, z), oracle_tolerance)
        row.append(oracle)
    return row


class EvalCommandService(CommandService):
    """
    Application Service: potential and gradient over a Cartesian grid.

    Rows run over x (slowest), then y, then z. Plate and edge points carry
    their flag and empty gradient cells. With the `oracle` parameter a
    U_oracle column from the quadrature oracle is appended.
    """

    command = "eval"

    def _run(self, config: RunConfig) -> tuple[list[str], dict]:
        body = config.bodies()
        x_axis, y_axis, z_axis = grid_axes(config)
        oracle_tolerance = config.tolerances.oracle if config.parameter("oracle", False) else None
        heights = z_axis.values()
        widths = y_axis.values()

        def rows_at(x: float) -> list[list]:
            return [_row(body, float(x), float(y), float(z), oracle_tolerance) for y in widths for z in heights]

        chunks = self._map(rows_at, x_axis.values(), config.threads)
        columns = COLUMNS + (["U_oracle"] if oracle_tolerance is not None else [])
        frame = pd.DataFrame([row for chunk in chunks for row in chunk], columns=columns)
        path = self._repository.save_table(frame, self._metadata(config))

        summary = {
            "points": len(frame),
            "on_plate": int((frame["flags"] == "on_plate").sum()),
            "on_edge": int((frame["flags"] == "on_edge").sum()),
        }
        if oracle_tolerance is not None:
            summary["max_oracle_difference"] = float(np.nanmax(np.abs(frame["U"] - frame["U_oracle"]), initial=0.0))
        return [str(path)], summary
