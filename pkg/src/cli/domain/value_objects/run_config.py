"""
CLI Domain Value Object - RunConfig.
"""

import copy
from dataclasses import dataclass, field

from src.cli.domain.value_objects.body_spec import body_from_spec
from src.cli.domain.value_objects.tolerances import Tolerances
from src.potential.domain.value_objects import AnnulusBody, Body, BodyStack
from src.shared.domain.constants import DefaultBody
from src.shared.domain.exceptions import ConfigurationError

COMMANDS = ("eval", "portrait", "equilibria", "bifurcation", "orbit")
CONFIG_KEYS = ("command", "body", "parameters", "output", "tolerances", "threads")

DEFAULT_BODY = {
    "type": "annulus",
    "a": DefaultBody.OUTER_RADIUS,
    "b": DefaultBody.INNER_RADIUS,
    "mu": DefaultBody.MU,
}


def merge_records(base: dict, overrides: dict) -> dict:
    """
    Nested merge where overrides win; None overrides are ignored.

    Nested dictionaries (parameters, tolerances) are merged key by key, any
    other value (including the body specification) is replaced as a whole.
    """
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if key in ("parameters", "tolerances") and isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = merge_records(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


@dataclass(frozen=True, eq=True)
class RunConfig:
    """
    Value Object: fully resolved configuration of one command run.

    Attributes:
        command: One of eval, portrait, equilibria, bifurcation, orbit
        body: Body specification (see body_spec)
        parameters: Command parameters as plain JSON values
        output: Output file path
        tolerances: Numerical tolerances
        threads: Worker threads for fan-out commands

    Business Rules:
    - The body specification parses to a valid body
    - Tolerances are positive and threads >= 1
    - from_dict(to_dict()) is the identity
    """

    command: str
    output: str
    body: dict = field(default_factory=lambda: dict(DEFAULT_BODY))
    parameters: dict = field(default_factory=dict)
    tolerances: Tolerances = field(default_factory=Tolerances)
    threads: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigurationError(f"Unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}")
        if not isinstance(self.output, str) or not self.output:
            raise ConfigurationError("An output path is required")
        if isinstance(self.threads, bool) or not isinstance(self.threads, int) or self.threads < 1:
            raise ConfigurationError(f"threads must be a positive integer, got {self.threads!r}")
        if not isinstance(self.parameters, dict):
            raise ConfigurationError("parameters must be an object")
        body_from_spec(self.body)

    @classmethod
    def from_dict(cls, record: dict) -> "RunConfig":
        """
        Build a configuration from its JSON record.

        Raises:
            ConfigurationError: On unknown keys, missing command/output or invalid values
        """
        if not isinstance(record, dict):
            raise ConfigurationError("A configuration must be a JSON object")
        unknown = set(record) - set(CONFIG_KEYS)
        if unknown:
            raise ConfigurationError(f"Unknown configuration key(s): {', '.join(sorted(unknown))}")
        for key in ("command", "output"):
            if key not in record:
                raise ConfigurationError(f"Configuration lacks '{key}'")
        threads = record.get("threads", 1)
        if isinstance(threads, float) and threads.is_integer():
            threads = int(threads)
        return cls(
            command=record["command"],
            output=record["output"],
            body=copy.deepcopy(record.get("body", DEFAULT_BODY)),
            parameters=copy.deepcopy(record.get("parameters", {})),
            tolerances=Tolerances.from_dict(record.get("tolerances")),
            threads=threads,
        )

    @classmethod
    def resolve(cls, file_record: dict | None, overrides: dict) -> "RunConfig":
        """Merge a configuration file record with flag overrides (flags win)."""
        return cls.from_dict(merge_records(file_record or {}, overrides))

    def to_dict(self) -> dict:
        """JSON record of the configuration."""
        return {
            "command": self.command,
            "body": copy.deepcopy(self.body),
            "parameters": copy.deepcopy(self.parameters),
            "output": self.output,
            "tolerances": self.tolerances.to_dict(),
            "threads": self.threads,
        }

    def provenance(self) -> dict:
        """The resolved configuration without run-environment entries (output, threads)."""
        return {
            "command": self.command,
            "body": copy.deepcopy(self.body),
            "parameters": copy.deepcopy(self.parameters),
            "tolerances": self.tolerances.to_dict(),
        }

    def bodies(self) -> Body:
        """The configured body."""
        return body_from_spec(self.body)

    def dynamics_bodies(self) -> BodyStack:
        """
        The configured body as a stack, for commands that integrate motion.

        Raises:
            ConfigurationError: For wires and disks
        """
        body = self.bodies()
        if not isinstance(body, (AnnulusBody, BodyStack)):
            raise ConfigurationError(
                f"Command {self.command} needs an annulus or a stack, got a {body.body_type.value}"
            )
        return BodyStack.coerce(body)

    def parameter(self, name: str, default=None):
        """A command parameter, or its default."""
        value = self.parameters.get(name)
        return default if value is None else value
