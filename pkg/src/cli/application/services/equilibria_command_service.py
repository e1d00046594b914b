"""
CLI Application Service for the `equilibria` command.
"""

from src.cli.application.services.command_service import CommandService, float_parameter
from src.cli.domain.value_objects import RunConfig
from src.equilibria.domain.aggregates import EquilibriumCensusAggregate
from src.equilibria.domain.services import (
    BifurcationService,
    CriticalPointService,
    MonodromyService,
    OriginSpectrumService,
)
from src.shared.domain.exceptions import ConfigurationError


class EquilibriaCommandService(CommandService):
    """
    Application Service: census of planar critical points at one Lambda.

    The JSON report holds every critical point with its certificates, the
    origin spectrum when Lambda = 0, the sufficient bound for a single annulus,
    and with `monodromy` the monodromy spectrum of every circular orbit.
    """

    command = "equilibria"

    def _run(self, config: RunConfig) -> tuple[list[str], dict]:
        stack = config.dynamics_bodies()
        angular_momentum = float_parameter(config, "Lambda", 0.0)
        if angular_momentum < 0.0:
            raise ConfigurationError("Lambda must be non-negative")
        r_max = config.parameter("r_max")
        reports = CriticalPointService.find_planar_critical_points(
            stack,
            angular_momentum,
            None if r_max is None else float_parameter(config, "r_max"),
            root_tolerance=config.tolerances.root,
        )
        census = EquilibriumCensusAggregate.create(stack, angular_momentum, reports)

        result = {}
        if config.parameter("monodromy", False):
            orbits = census.circular_orbits()
            spectra = self._map(
                lambda report: MonodromyService.circular_orbit_monodromy(stack, report.r0, angular_momentum),
                orbits,
                config.threads,
            )
            for report, spectrum in zip(orbits, spectra, strict=True):
                census.attach_monodromy(report.r0, spectrum)
            result["monodromy"] = [spectrum.to_dict() for spectrum in spectra]

        result = {**census.to_dict(), **result}
        if angular_momentum == 0.0:
            result["origin_spectrum"] = OriginSpectrumService.origin_spectrum(stack).to_dict()
        if len(stack.annuli) == 1:
            result["lambda_sufficient"] = BifurcationService.sufficient_lambda(stack.annuli[0])

        path = self._repository.save_report({"program": self._program, "config": config.provenance(), "result": result})
        self.publish_events(census)
        return [str(path)], {"Lambda": angular_momentum, **result["counts"]}
