"""
Domain Service for Phase-Portrait Data.
"""

import numpy as np

from src.dynamics.domain.services.effective_potential_service import EffectivePotentialService
from src.dynamics.domain.value_objects import LevelCurve
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack
from src.shared.domain.enums import PortraitMode
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


def _level(mode: PortraitMode, energy: float, angular_momentum: float, grid: np.ndarray, potential) -> LevelCurve:
    radicand = np.array([2.0 * (energy - potential(q)) if np.isfinite(q) else -1.0 for q in grid])
    accessible = np.nonzero(radicand >= 0.0)[0]
    return LevelCurve(
        mode=mode,
        energy=energy,
        angular_momentum=angular_momentum,
        coordinates=grid[accessible],
        speeds=np.sqrt(radicand[accessible]),
        grid_indices=accessible,
        grid_size=grid.size,
    )


class PhasePortraitService:
    """
    Domain Service: level curves velocity = +/- sqrt(2 (E - V(q))) of the one-degree-of-freedom reductions.

    Axial portraits use V = U(0, 0, z); planar portraits use V = W(r) at fixed Lambda.
    """

    @staticmethod
    def axial_level(bodies: AnnulusBody | BodyStack, energy: float, heights: np.ndarray) -> LevelCurve:
        """Level E of the (z, zdot) portrait sampled on the given heights."""
        grid = np.asarray(heights, dtype=float)
        return _level(
            PortraitMode.AXIAL, energy, 0.0, grid, lambda z: StackPotentialService.axis_potential(bodies, z)
        )

    @staticmethod
    def planar_level(
        bodies: AnnulusBody | BodyStack, angular_momentum: float, energy: float, radii: np.ndarray
    ) -> LevelCurve:
        """
        Level E of the (r, rdot) portrait at fixed Lambda.

        Edge radii (and r = 0 when Lambda > 0) are removed from the grid.
        """
        edges = set(BodyStack.coerce(bodies).edge_radii)
        grid = np.array(
            [
                radius
                for radius in np.asarray(radii, dtype=float)
                if radius not in edges and (radius > 0.0 or (radius == 0.0 and angular_momentum == 0.0))
            ]
        )
        return _level(
            PortraitMode.PLANAR,
            energy,
            angular_momentum,
            grid,
            lambda r: EffectivePotentialService.value(bodies, angular_momentum, r),
        )

    @staticmethod
    def axial_portrait(
        bodies: AnnulusBody | BodyStack, energies: list[float], heights: np.ndarray
    ) -> list[LevelCurve]:
        """One axial level curve per energy, in the given order."""
        levels = [PhasePortraitService.axial_level(bodies, energy, heights) for energy in energies]
        logger.debug("Axial portrait: %d levels on %d heights", len(levels), len(heights))
        return levels

    @staticmethod
    def planar_portrait(
        bodies: AnnulusBody | BodyStack, angular_momentum: float, energies: list[float], radii: np.ndarray
    ) -> list[LevelCurve]:
        """One planar level curve per energy, in the given order."""
        levels = [PhasePortraitService.planar_level(bodies, angular_momentum, energy, radii) for energy in energies]
        logger.debug("Planar portrait at Lambda=%g: %d levels on %d radii", angular_momentum, len(levels), len(radii))
        return levels
