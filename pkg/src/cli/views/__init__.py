"""
src.cli.views - Command Line View module.
"""

from .command_line_view import CommandLineView, exit_code_for

__all__ = [
    "CommandLineView",
    "exit_code_for",
]
