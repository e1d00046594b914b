"""
Command Line View - CLI Bounded Context.

Parses `annulus-dyn <command> [flags]`, resolves the run configuration,
dispatches to the command's application service and maps failures to exit
codes with one JSON error record on stderr.
"""

import argparse
import json
import sys
from collections.abc import Callable

from src.cli.application.dtos import CommandResultDTO
from src.cli.application.services import CommandService, RunConfigService
from src.cli.domain.value_objects import GridAxis, RunConfig
from src.shared.domain.exceptions import ConfigurationError, ConvergenceError, NumericalDomainError
from src.shared.infrastructure import get_logger, resolve_level, setup_logging

logger = get_logger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_CONFIGURATION = 2
EXIT_NUMERICAL_DOMAIN = 3
EXIT_CONVERGENCE = 4


def exit_code_for(error: BaseException) -> int:
    """Exit code of a failure."""
    if isinstance(error, ConfigurationError):
        return EXIT_CONFIGURATION
    if isinstance(error, NumericalDomainError):
        return EXIT_NUMERICAL_DOMAIN
    if isinstance(error, ConvergenceError):
        return EXIT_CONVERGENCE
    return EXIT_FAILURE


class _ArgumentParser(argparse.ArgumentParser):
    """Parser that reports usage errors as ConfigurationError instead of exiting."""

    def error(self, message):
        raise ConfigurationError(f"{self.prog}: {message}")


def _state(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"state must be comma-separated numbers, got {text!r}") from error


def _body_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise argparse.ArgumentTypeError(f"--body must be JSON: {error}") from error


class CommandLineView:
    """
    View component for the command line.

    Responsibilities:
    - Build the argument parser
    - Turn parsed flags into configuration overrides
    - Run the selected command and report its outcome
    """

    def __init__(
        self,
        run_config_service: RunConfigService,
        service_factory: Callable[[RunConfig], CommandService],
        program: str = "annulus-dyn",
        version: str = "",
    ):
        """
        Initialize Command Line View.

        Args:
            run_config_service: Service resolving configuration files and overrides.
            service_factory: Builds the application service of a resolved configuration.
            program: Program name shown in usage messages.
            version: Version shown by --version.
        """
        self.run_config_service = run_config_service
        self.service_factory = service_factory
        self.program = program
        self.version = version

    def build_parser(self) -> argparse.ArgumentParser:
        """Argument parser with one subcommand per command."""
        common = _ArgumentParser(add_help=False)
        common.add_argument("--config", help="JSON configuration file (flags override it)")
        common.add_argument("-o", "--output", help="Output file path")
        common.add_argument("--threads", type=int, help="Worker threads for grid and multi-level commands")
        common.add_argument("--log-level", default="INFO", help="Logging level (DEBUG, INFO, WARNING, ...)")
        bodies = common.add_mutually_exclusive_group()
        bodies.add_argument("--body", type=_body_json, help="Body specification as JSON")
        bodies.add_argument(
            "--annulus",
            nargs=3,
            type=float,
            action="append",
            metavar=("A", "B", "MU"),
            help="Annulus b < r < a with gravitational parameter mu (repeat for a stack)",
        )
        bodies.add_argument("--disk", nargs=2, type=float, metavar=("A", "MU"), help="Solid disk")
        bodies.add_argument("--wire", nargs=2, type=float, metavar=("A", "MU"), help="Circular wire")
        common.add_argument("--rtol", type=float, help="Relative integrator tolerance")
        common.add_argument("--atol", type=float, help="Absolute integrator tolerance")
        common.add_argument("--oracle-tol", type=float, help="Quadrature oracle tolerance")
        common.add_argument("--root-tol", type=float, help="Relative root certificate width")
        common.add_argument("--bifurcation-tol", type=float, help="Final bifurcation bracket width")

        parser = _ArgumentParser(prog=self.program, description="Potentials and dynamics of annular disks")
        parser.add_argument("--version", action="version", version=f"{self.program} {self.version}")
        commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

        evaluate = commands.add_parser("eval", parents=[common], help="Potential and gradient on a grid")
        evaluate.add_argument("--grid", nargs="+", type=GridAxis.parse, metavar="AXIS", help="x=-2:2:101 y=0 ...")
        evaluate.add_argument("--line", nargs="+", type=GridAxis.parse, metavar="AXIS", help="Alias of --grid")
        evaluate.add_argument("--oracle", action="store_true", default=None, help="Add a quadrature-oracle column")

        portrait = commands.add_parser("portrait", parents=[common], help="Phase-portrait level curves")
        portrait.add_argument("--mode", choices=["axial", "planar"])
        portrait.add_argument("--lambda", dest="Lambda", nargs="+", type=float, help="Angular momenta (planar)")
        portrait.add_argument("--energies", nargs="+", type=float, help="Energy levels")
        portrait.add_argument("--levels", type=int, help="Number of default energy levels")
        portrait.add_argument("--samples", type=int, help="Grid samples per level")
        portrait.add_argument("--r-range", dest="r_range", nargs=2, type=float, metavar=("LO", "HI"))
        portrait.add_argument("--z-max", dest="z_max", type=float, help="Half height of the axial grid")
        portrait.add_argument("--emit-wprime", dest="emit_wprime", action="store_true", default=None)

        equilibria = commands.add_parser("equilibria", parents=[common], help="Critical points of W")
        equilibria.add_argument("--lambda", dest="Lambda", type=float, help="Angular momentum")
        equilibria.add_argument("--r-max", dest="r_max", type=float, help="Outer end of the scan")
        equilibria.add_argument("--monodromy", action="store_true", default=None, help="Monodromy of circular orbits")

        bifurcation = commands.add_parser("bifurcation", parents=[common], help="Exterior orbit bifurcation")
        bifurcation.add_argument("--bracket", nargs=2, type=float, metavar=("LO", "HI"))

        orbit = commands.add_parser("orbit", parents=[common], help="Propagate an orbit")
        orbit.add_argument("--state", type=_state, help="x,y,z,vx,vy,vz or r,rdot,z,zdot,Lambda with --reduced")
        orbit.add_argument("--tmax", type=float, help="Final time")
        orbit.add_argument("--samples", type=int, help="Evenly spaced output samples")
        orbit.add_argument("--reduced", action="store_true", default=None, help="Integrate the reduced system")
        return parser

    @staticmethod
    def overrides(args: argparse.Namespace) -> dict:
        """Configuration overrides carried by the parsed flags."""
        body = args.body
        if args.annulus:
            annuli = [{"a": a, "b": b, "mu": mu} for a, b, mu in args.annulus]
            body = {"type": "annulus", **annuli[0]} if len(annuli) == 1 else {"type": "stack", "annuli": annuli}
        elif args.disk:
            body = {"type": "disk", "a": args.disk[0], "mu": args.disk[1]}
        elif args.wire:
            body = {"type": "wire", "a": args.wire[0], "mu": args.wire[1]}

        tolerances = {
            "rtol": args.rtol,
            "atol": args.atol,
            "oracle": args.oracle_tol,
            "root": args.root_tol,
            "bifurcation": args.bifurcation_tol,
        }
        parameters = {}
        if args.command == "eval":
            axes = (args.grid or []) + (args.line or [])
            if axes:
                parameters["axes"] = {axis.name: axis.to_list() for axis in axes}
            parameters["oracle"] = args.oracle
        elif args.command == "portrait":
            for name in ("mode", "Lambda", "energies", "levels", "samples", "r_range", "z_max", "emit_wprime"):
                parameters[name] = getattr(args, name)
        elif args.command == "equilibria":
            for name in ("Lambda", "r_max", "monodromy"):
                parameters[name] = getattr(args, name)
        elif args.command == "bifurcation":
            parameters["bracket"] = args.bracket
        elif args.command == "orbit":
            for name in ("state", "tmax", "samples", "reduced"):
                parameters[name] = getattr(args, name)

        return {
            "command": args.command,
            "output": args.output,
            "body": body,
            "threads": args.threads,
            "tolerances": {key: value for key, value in tolerances.items() if value is not None},
            "parameters": {key: value for key, value in parameters.items() if value is not None},
        }

    def run(self, argv: list[str] | None = None) -> int:
        """
        Parse the arguments, run the command and return the exit code.

        Args:
            argv: Arguments without the program name (sys.argv[1:] by default).
        """
        try:
            args = self.build_parser().parse_args(argv)
            setup_logging(resolve_level(args.log_level))
            config = self.run_config_service.resolve(args.config, self.overrides(args))
            result = self.service_factory(config).execute(config)
        except Exception as error:
            return self.report_failure(error)
        self.report_success(result)
        return EXIT_SUCCESS

    @staticmethod
    def report_success(result: CommandResultDTO) -> None:
        """Log the outputs and summary of a finished command."""
        logger.info("%s finished: %s", result.command, ", ".join(result.outputs))
        for key, value in result.summary.items():
            logger.info("  %s: %s", key, value)

    @staticmethod
    def report_failure(error: BaseException) -> int:
        """Log the failure, write its JSON record to stderr and return its exit code."""
        code = exit_code_for(error)
        if code == EXIT_FAILURE:
            logger.error("Command failed: %s", error, exc_info=True)
        else:
            logger.error("Command failed: %s", error)
        record = {"error": type(error).__name__, "message": str(error), "exit_code": code}
        sys.stderr.write(json.dumps(record) + "\n")
        return code


__all__ = ["CommandLineView", "exit_code_for"]
