"""
Shared Domain Event - Command Completed Event
"""

from dataclasses import dataclass

from .domain_event import DomainEvent


@dataclass(frozen=True)
class CommandCompletedEvent(DomainEvent):
    """
    Domain Event: A command-line command finished and wrote its outputs.

    Emitted by: the command application services after the repositories wrote the files
    Consumed by: CommandCompletedEventHandler (logging)

    Attributes:
        command: Command name (eval, portrait, equilibria, bifurcation, orbit)
        outputs: Paths of the files written, in writing order
    """

    command: str
    outputs: tuple[str, ...]
