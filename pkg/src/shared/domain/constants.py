"""
Shared Domain Numerical Constants.
"""

import math


class DefaultBody:
    """
    Reference annulus used when no body is configured.

    With a = 1 the outer radius fixes the length unit and with mu = 1 the
    gravitational parameter fixes the time unit.
    """

    OUTER_RADIUS = 1.0
    INNER_RADIUS = 0.75
    MU = 1.0


class EllipticTolerances:
    """
    Thresholds of the elliptic-integral kernel.
    """

    # Closest approach to m = 1 accepted by complete_k (in units of machine epsilon).
    NEAR_SINGULAR_EPSILONS = 4.0
    MACHINE_EPSILON = 2.220446049250313e-16

    # Below this parameter the radial-field combination (1 - m/2)K - E is summed from its series.
    SMALL_PARAMETER_SERIES_LIMIT = 5.0e-3


class OracleSettings:
    """
    Defaults of the brute-force quadrature oracle.
    """

    ABSOLUTE_TOLERANCE = 1.0e-10
    SUBDIVISION_LIMIT = 500
    INNER_TOLERANCE_FACTOR = 1.0e-3


class DerivativeSettings:
    """
    Richardson-extrapolated central differences.
    """

    COARSE_STEP = 1.0e-4
    FINE_STEP = 5.0e-5


class IntegratorDefaults:
    """
    Trajectory integration defaults.
    """

    METHOD = "DOP853"
    RELATIVE_TOLERANCE = 1.0e-12
    ABSOLUTE_TOLERANCE = 1.0e-12

    # Crossing z = 0 with r in [b - eps, a + eps] is a plate collision.
    COLLISION_MARGIN = 1.0e-9
    EDGE_PROXIMITY = 1.0e-6

    # Escape when R > ESCAPE_RADIUS_FACTOR * max(a_i) with E >= 0.
    ESCAPE_RADIUS_FACTOR = 50.0

    MAX_SEGMENTS = 100000


class ScanSettings:
    """
    Sign-change scan of the effective-potential derivative.
    """

    # Geometric points at edge * (1 +/- 2**-j) for j = 1..EDGE_REFINEMENT_LEVELS.
    EDGE_REFINEMENT_LEVELS = 40
    POINTS_PER_REGION = 200
    ROOT_RELATIVE_TOLERANCE = 1.0e-12
    RESIDUAL_RELATIVE_TOLERANCE = 1.0e-10

    # |W''| <= DEGENERACY_FACTOR * mu / a**3 is reported as degenerate.
    DEGENERACY_FACTOR = 1.0e-8

    # Smallest radius sampled in the hole when looking for roots.
    INNER_RADIUS_FRACTION = 1.0e-6

    DEFAULT_OUTER_FACTOR = 50.0


class StabilitySettings:
    """
    Spectral-stability thresholds.
    """

    UNIT_CIRCLE_TOLERANCE = 1.0e-6
    IMAGINARY_AXIS_TOLERANCE = 1.0e-6
    CIRCULARITY_TOLERANCE = 1.0e-10


class BifurcationSettings:
    """
    Angular-momentum bisection on the count of exterior circular orbits.
    """

    DEFAULT_TOLERANCE = 1.0e-6
    MAX_ITERATIONS = 200


FOUR_PI = 4.0 * math.pi
