"""
CLI Application Service for the `bifurcation` command.
"""

from src.cli.application.services.command_service import CommandService, float_list_parameter
from src.cli.domain.value_objects import RunConfig
from src.equilibria.domain.events import BifurcationLocatedEvent
from src.equilibria.domain.services import BifurcationService
from src.shared.domain.exceptions import ConfigurationError

DEFAULT_BRACKET = [0.1, 2.5]


class BifurcationCommandService(CommandService):
    """
    Application Service: bisection for the Lambda where exterior circular orbits appear.
    """

    command = "bifurcation"

    def _run(self, config: RunConfig) -> tuple[list[str], dict]:
        stack = config.dynamics_bodies()
        bracket = float_list_parameter(config, "bracket", DEFAULT_BRACKET)
        if len(bracket) != 2:
            raise ConfigurationError(f"A bracket needs two values, got {bracket!r}")
        result = BifurcationService.bifurcation_lambda(stack, (bracket[0], bracket[1]), config.tolerances.bifurcation)
        path = self._repository.save_report(
            {"program": self._program, "config": config.provenance(), "result": result.to_dict()}
        )
        self.publish(BifurcationLocatedEvent(result=result))
        return [str(path)], {"lambda_star": result.lambda_star, "lambda_sufficient": result.lambda_sufficient}
