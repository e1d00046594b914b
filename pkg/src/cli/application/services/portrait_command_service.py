"""
CLI Application Service for the `portrait` command.
"""

import numpy as np
import pandas as pd

from src.cli.application.services.command_service import CommandService, float_list_parameter, float_parameter
from src.cli.domain.value_objects import RunConfig
from src.dynamics.domain.services import AxialMotionService, EffectivePotentialService, PhasePortraitService
from src.potential.domain.value_objects import BodyStack
from src.shared.domain.enums import PortraitMode
from src.shared.domain.exceptions import ConfigurationError

DEFAULT_LEVELS = 5
DEFAULT_SAMPLES = 401
AXIAL_MARGIN = 1.05


def _spread(low: float, high: float, levels: int) -> list[float]:
    """`levels` energies strictly between low and high."""
    return [low + (high - low) * index / (levels + 1) for index in range(1, levels + 1)]


class PortraitCommandService(CommandService):
    """
    Application Service: level curves of the axial or planar phase portrait.

    One CSV per level (suffix _000, _001, ...) and, with `emit_wprime`, the
    W / W' curves of every requested Lambda in one `_wprime` table.
    Default energies are spread evenly over (E*, 0) on the axis and between
    the minimum of W and its value at the outer end of the radius range in
    the plane.
    """

    command = "portrait"

    def _run(self, config: RunConfig) -> tuple[list[str], dict]:
        stack = config.dynamics_bodies()
        try:
            mode = PortraitMode(config.parameter("mode", PortraitMode.AXIAL.value))
        except ValueError as error:
            raise ConfigurationError(f"Unknown portrait mode {config.parameter('mode')!r}") from error
        levels = int(float_parameter(config, "levels", DEFAULT_LEVELS))
        samples = int(float_parameter(config, "samples", DEFAULT_SAMPLES))
        if levels < 1 or samples < 2:
            raise ConfigurationError("A portrait needs at least one level and two samples")
        energies = float_list_parameter(config, "energies")
        lambdas = float_list_parameter(config, "Lambda", [0.0 if mode is PortraitMode.AXIAL else 1.0])
        radii = self._radii(config, stack, samples)

        if mode is PortraitMode.AXIAL:
            energies = energies or _spread(stack.origin_energy, 0.0, levels)
            heights = self._heights(config, stack, energies, samples)
            curves = self._map(
                lambda energy: PhasePortraitService.axial_level(stack, energy, heights), energies, config.threads
            )
        else:
            tasks = [
                (angular_momentum, energy)
                for angular_momentum in lambdas
                for energy in (energies or self._planar_energies(stack, angular_momentum, radii, levels))
            ]
            curves = self._map(
                lambda task: PhasePortraitService.planar_level(stack, task[0], task[1], radii), tasks, config.threads
            )

        metadata = self._metadata(config)
        outputs = [
            str(self._repository.save_table(curve.to_frame(), metadata, suffix=f"_{index:03d}"))
            for index, curve in enumerate(curves)
        ]
        if config.parameter("emit_wprime", False):
            frames = self._map(
                lambda angular_momentum: EffectivePotentialService.curve(stack, angular_momentum, radii).to_frame(),
                lambdas,
                config.threads,
            )
            outputs.append(str(self._repository.save_table(pd.concat(frames, ignore_index=True), metadata, "_wprime")))

        summary = {
            "mode": mode.value,
            "levels": len(curves),
            "closed_loops": sum(len(curve.closed_loops()) for curve in curves),
        }
        return outputs, summary

    @staticmethod
    def _radii(config: RunConfig, stack: BodyStack, samples: int) -> np.ndarray:
        low, high = float_list_parameter(config, "r_range", [1.0e-3 * stack.outer_radius, 3.0 * stack.outer_radius])
        if not 0.0 <= low < high:
            raise ConfigurationError("r_range must satisfy 0 <= low < high")
        return np.linspace(low, high, samples)

    @staticmethod
    def _heights(config: RunConfig, stack: BodyStack, energies: list[float], samples: int) -> np.ndarray:
        z_max = config.parameter("z_max")
        if z_max is None:
            bound = [
                AxialMotionService.turning_height(stack, energy)
                for energy in energies
                if stack.origin_energy < energy < 0.0
            ]
            z_max = AXIAL_MARGIN * max(bound, default=3.0 * stack.outer_radius)
        z_max = float(z_max)
        if not z_max > 0.0:
            raise ConfigurationError("z_max must be positive")
        return np.linspace(-z_max, z_max, samples)

    @staticmethod
    def _planar_energies(stack: BodyStack, angular_momentum: float, radii: np.ndarray, levels: int) -> list[float]:
        curve = EffectivePotentialService.curve(stack, angular_momentum, radii[radii > 0.0])
        return _spread(float(np.min(curve.values)), float(curve.values[-1]), levels)
