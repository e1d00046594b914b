"""
Data Transfer Object for Command Results.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CommandResultDTO:
    """
    DTO for transferring the outcome of a command to the command-line view.

    Attributes:
        command: Command name
        outputs: Written files (config file last)
        summary: Short key facts for the log (counts, located values, termination reason)
    """

    command: str
    outputs: tuple[str, ...]
    summary: dict = field(default_factory=dict)
