"""
Dynamics Domain Value Object - IntegrationSettings.
"""

from dataclasses import dataclass

from src.shared.domain.constants import IntegratorDefaults
from src.shared.domain.exceptions import PreconditionError


@dataclass(frozen=True)
class IntegrationSettings:
    """
    Value Object: integrator tolerances and event thresholds.

    Attributes:
        rtol: Relative local error tolerance
        atol: Absolute local error tolerance
        method: scipy.integrate.solve_ivp method name
        collision_margin: eps in the collision band [b - eps, a + eps]
        edge_proximity: Distance to an edge circle that ends the integration
        escape_factor: Escape radius in units of the outermost plate radius
        max_segments: Bound on restarts at non-colliding plane crossings
    """

    rtol: float = IntegratorDefaults.RELATIVE_TOLERANCE
    atol: float = IntegratorDefaults.ABSOLUTE_TOLERANCE
    method: str = IntegratorDefaults.METHOD
    collision_margin: float = IntegratorDefaults.COLLISION_MARGIN
    edge_proximity: float = IntegratorDefaults.EDGE_PROXIMITY
    escape_factor: float = IntegratorDefaults.ESCAPE_RADIUS_FACTOR
    max_segments: int = IntegratorDefaults.MAX_SEGMENTS

    def __post_init__(self):
        for name in ("rtol", "atol", "edge_proximity", "escape_factor"):
            if getattr(self, name) <= 0.0:
                raise PreconditionError(f"Integration setting {name} must be positive")
        if self.collision_margin < 0.0:
            raise PreconditionError("Collision margin must be non-negative")
        if self.max_segments < 1:
            raise PreconditionError("At least one integration segment is required")
