"""
Potential Domain Value Object - FieldSample.
"""

from dataclasses import dataclass

from src.shared.domain.exceptions import NumericalDomainError


@dataclass(frozen=True)
class FieldSample:
    """
    Value Object: potential and gradient of a body at one field point.

    Attributes:
        potential: Specific potential energy U, None on an edge circle or wire
        gradient: (U_x, U_y, U_z), None wherever the gradient is undefined
        on_plate: Point lies on a plate (z = 0 inside a plate, edges excluded)
        on_edge: Point lies on an edge circle (or on a wire)
        normal_jump: 4 pi G sigma of the plate the point lies on, when on_plate
    """

    potential: float | None
    gradient: tuple[float, float, float] | None
    on_plate: bool = False
    on_edge: bool = False
    normal_jump: float | None = None

    def __post_init__(self):
        if self.gradient is not None and (self.on_plate or self.on_edge):
            raise NumericalDomainError("Gradient cannot be populated on a plate or an edge")

    @property
    def flags(self) -> str:
        """Compact flag string for tabular output."""
        if self.on_edge:
            return "on_edge"
        if self.on_plate:
            return "on_plate"
        return ""
