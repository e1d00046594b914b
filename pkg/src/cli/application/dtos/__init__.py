"""
src.cli.application.dtos - CLI DTOs module.
"""

from .command_result_dto import CommandResultDTO

__all__ = [
    "CommandResultDTO",
]
