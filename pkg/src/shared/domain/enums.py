"""
Shared Domain Enums Module.

Consolidated file containing all shared domain enumerations.
"""

from enum import Enum


class BodyType(Enum):
    """
    Enumeration of the supported gravitating bodies.
    """

    WIRE = "wire"
    DISK = "disk"
    ANNULUS = "annulus"
    STACK = "stack"


class EquilibriumKind(Enum):
    """
    Classification of a critical point of the effective potential by its curvature.
    """

    STABLE_MIN = "stable-min"
    UNSTABLE_MAX = "unstable-max"
    DEGENERATE = "degenerate"


class Region(Enum):
    """
    Radial region of the equatorial plane relative to the plates.
    """

    HOLE = "hole"  # 0 <= r < innermost inner radius
    PLATE_INTERIOR = "plate-interior"  # b_i < r < a_i
    GAP = "gap"  # between two consecutive plates
    EXTERIOR = "exterior"  # r > outermost outer radius


class TerminationReason(Enum):
    """
    Why a trajectory integration stopped.
    """

    TIME_LIMIT = "time-limit"
    PLATE_COLLISION = "plate-collision"
    ESCAPE = "escape"
    EDGE_PROXIMITY = "edge-proximity"


class StabilityVerdict(Enum):
    """
    Spectral stability of an equilibrium or a periodic orbit.
    """

    SPECTRALLY_STABLE = "spectrally-stable"
    SPECTRALLY_UNSTABLE = "spectrally-unstable"


class PortraitMode(Enum):
    """
    Phase-portrait section.
    """

    AXIAL = "axial"
    PLANAR = "planar"
