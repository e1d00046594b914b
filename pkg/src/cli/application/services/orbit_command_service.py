"""
CLI Application Service for the `orbit` command.
"""

import numpy as np

from src.cli.application.services.command_service import CommandService, float_list_parameter, float_parameter
from src.cli.domain.value_objects import RunConfig
from src.dynamics.domain.events import TrajectoryTerminatedEvent
from src.dynamics.domain.services import TrajectoryIntegrationService
from src.dynamics.domain.value_objects import CartesianState, ReducedState
from src.shared.domain.exceptions import ConfigurationError

DEFAULT_DURATION = 100.0


class OrbitCommandService(CommandService):
    """
    Application Service: propagate one orbit and tabulate it with E and L columns.

    `state` is (x, y, z, vx, vy, vz), or (r, rdot, z, zdot, Lambda) with `reduced`.
    `samples` selects evenly spaced output times instead of the solver steps.
    """

    command = "orbit"

    def _run(self, config: RunConfig) -> tuple[list[str], dict]:
        stack = config.dynamics_bodies()
        values = float_list_parameter(config, "state")
        if values is None:
            raise ConfigurationError("Command orbit needs parameter 'state'")
        t_end = float_parameter(config, "tmax", DEFAULT_DURATION)
        samples = config.parameter("samples")
        sample_times = None if samples is None else np.linspace(0.0, t_end, int(float_parameter(config, "samples")))
        settings = self._integration_settings(config)

        if config.parameter("reduced", False):
            if len(values) != 5:
                raise ConfigurationError(f"A reduced state needs (r, rdot, z, zdot, Lambda), got {len(values)} values")
            trajectory = TrajectoryIntegrationService.integrate_reduced(
                stack, ReducedState(*values), t_end, settings, sample_times
            )
        else:
            if len(values) != 6:
                raise ConfigurationError(f"A Cartesian state needs 6 values, got {len(values)}")
            trajectory = TrajectoryIntegrationService.integrate(
                stack, CartesianState.from_sequence(values), t_end, settings, sample_times
            )

        path = self._repository.save_table(trajectory.to_frame(), self._metadata(config))
        self.publish(
            TrajectoryTerminatedEvent(
                reason=trajectory.reason,
                final_time=trajectory.final_time,
                energy_drift=trajectory.energy_drift,
            )
        )
        summary = {
            "reason": trajectory.reason.value,
            "final_time": trajectory.final_time,
            "energy_drift": trajectory.energy_drift,
            "samples": len(trajectory.times),
        }
        return [str(path)], summary
