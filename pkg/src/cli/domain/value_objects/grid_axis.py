"""
CLI Domain Value Object - GridAxis.
"""

import math
from dataclasses import dataclass

import numpy as np

from src.shared.domain.exceptions import ConfigurationError

AXIS_NAMES = ("x", "y", "z")


def _number(text: str, axis_text: str) -> float:
    try:
        value = float(text)
    except ValueError as error:
        raise ConfigurationError(f"Malformed grid axis '{axis_text}': {text!r} is not a number") from error
    if not math.isfinite(value):
        raise ConfigurationError(f"Malformed grid axis '{axis_text}': values must be finite")
    return value


@dataclass(frozen=True)
class GridAxis:
    """
    Value Object: one sampled Cartesian axis, written `x=start:stop:count` or `x=value`.

    Business Rules:
    - Name is one of x, y, z
    - count >= 1; a single sample requires start == stop
    """

    name: str
    start: float
    stop: float
    count: int = 1

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ConfigurationError(f"Grid axis must be one of {AXIS_NAMES}, got {self.name!r}")
        if self.count < 1:
            raise ConfigurationError(f"Grid axis {self.name} needs at least one sample")
        if self.count == 1 and self.start != self.stop:
            raise ConfigurationError(f"Grid axis {self.name} with one sample must have start == stop")

    @classmethod
    def parse(cls, axis_text: str) -> "GridAxis":
        """
        Parse `name=start:stop:count` or `name=value`.

        Raises:
            ConfigurationError: If the text is malformed
        """
        name, separator, body = axis_text.partition("=")
        if not separator:
            raise ConfigurationError(f"Malformed grid axis '{axis_text}': expected name=start:stop:count")
        parts = body.split(":")
        if len(parts) == 1:
            value = _number(parts[0], axis_text)
            return cls(name.strip(), value, value, 1)
        if len(parts) != 3:
            raise ConfigurationError(f"Malformed grid axis '{axis_text}': expected name=start:stop:count")
        try:
            count = int(parts[2])
        except ValueError as error:
            raise ConfigurationError(f"Malformed grid axis '{axis_text}': count must be an integer") from error
        return cls(name.strip(), _number(parts[0], axis_text), _number(parts[1], axis_text), count)

    @classmethod
    def from_list(cls, name: str, values: list) -> "GridAxis":
        """Axis from its serialized [start, stop, count]."""
        if not isinstance(values, (list, tuple)) or len(values) != 3:
            raise ConfigurationError(f"Grid axis {name} must be [start, stop, count]")
        return cls(name, float(values[0]), float(values[1]), int(values[2]))

    def values(self) -> np.ndarray:
        """Sample positions, endpoints included."""
        return np.linspace(self.start, self.stop, self.count)

    def to_list(self) -> list:
        """[start, stop, count]."""
        return [self.start, self.stop, self.count]
