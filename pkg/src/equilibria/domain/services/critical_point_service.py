"""
Domain Service for Planar Critical Points of the Effective Potential.

W'(r) diverges logarithmically at every edge radius, to -inf at an inner edge
and to +inf at an outer edge, and near the bifurcation two exterior roots sit
very close to each other. The scan therefore combines a coarse grid per region, geometric points
at edge * (1 +/- 2**-j) and a bounded minimisation of |W'| at every local dip
that does not change sign.
"""

from collections.abc import Callable

import numpy as np
from scipy import optimize

from src.dynamics.domain.services import EffectivePotentialService
from src.equilibria.domain.value_objects import EquilibriumReport
from src.potential.domain.services import StackPotentialService
from src.potential.domain.value_objects import AnnulusBody, BodyStack
from src.shared.domain.constants import EllipticTolerances, ScanSettings
from src.shared.domain.enums import EquilibriumKind, Region
from src.shared.domain.exceptions import PreconditionError
from src.shared.domain.services import FiniteDifferenceService
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)

Interval = tuple[Region, float, float]

ROOT_RTOL = 4.0 * EllipticTolerances.MACHINE_EPSILON
CERTIFICATE_WIDENINGS = 6
DUPLICATE_RELATIVE_DISTANCE = 1.0e-10


def _intervals(stack: BodyStack, r_max: float) -> list[Interval]:
    intervals = [(Region.HOLE, 0.0, stack.inner_radius)]
    members = stack.annuli
    for index, member in enumerate(members):
        intervals.append((Region.PLATE_INTERIOR, member.b, member.a))
        if index + 1 < len(members):
            intervals.append((Region.GAP, member.a, members[index + 1].b))
    intervals.append((Region.EXTERIOR, stack.outer_radius, r_max))
    return intervals


def _grid(region: Region, low: float, high: float, points: int, levels: int) -> np.ndarray:
    """Sample radii strictly inside (low, high); the exterior keeps r_max itself."""
    if region is Region.HOLE:
        base = np.geomspace(ScanSettings.INNER_RADIUS_FRACTION * high, high, points + 1)[:-1]
    elif region is Region.EXTERIOR:
        base = np.geomspace(low, high, points + 1)[1:]
    else:
        base = np.linspace(low, high, points + 2)[1:-1]
    halvings = 2.0 ** -np.arange(1, levels + 1)
    refinements = [base]
    if low > 0.0:
        refinements.append(low * (1.0 + halvings))
    if region is not Region.EXTERIOR:
        refinements.append(high * (1.0 - halvings))
    grid = np.unique(np.concatenate(refinements))
    upper = grid <= high if region is Region.EXTERIOR else grid < high
    return grid[(grid > low) & upper]


def _brackets(
    slope: Callable[[float], float], grid: np.ndarray, tolerance: float
) -> tuple[list[float], list[tuple[float, float]]]:
    """Exact zeros on the grid and sign-change brackets, dips split at their extremum."""
    values = np.array([slope(radius) for radius in grid])
    exact = [float(radius) for radius, value in zip(grid, values) if value == 0.0]
    brackets = []
    for index in range(grid.size - 1):
        if values[index] * values[index + 1] < 0.0:
            brackets.append((float(grid[index]), float(grid[index + 1])))
    for index in range(1, grid.size - 1):
        left, middle, right = values[index - 1 : index + 2]
        if left * middle <= 0.0 or middle * right <= 0.0:
            continue
        if abs(middle) >= abs(left) or abs(middle) >= abs(right):
            continue
        sign = np.sign(middle)
        low, high = float(grid[index - 1]), float(grid[index + 1])
        dip = optimize.minimize_scalar(
            lambda radius, sign=sign: sign * slope(radius),
            bounds=(low, high),
            method="bounded",
            options={"xatol": tolerance * low},
        )
        if dip.fun < 0.0:
            brackets.extend([(low, float(dip.x)), (float(dip.x), high)])
        elif dip.fun == 0.0:
            exact.append(float(dip.x))
    return exact, brackets


def _certificate(
    slope: Callable[[float], float], root: float, low: float, high: float, tolerance: float
) -> tuple[float, float]:
    """Smallest sign-change bracket around root, starting at width tolerance * root."""
    half = 0.5 * tolerance * root
    for _ in range(CERTIFICATE_WIDENINGS):
        left, right = max(low, root - half), min(high, root + half)
        left_value, right_value = slope(left), slope(right)
        if left_value * right_value <= 0.0:
            return left, right
        half *= 10.0
    return low, high


def _deduplicate(roots: list[tuple[float, tuple[float, float]]]) -> list[tuple[float, tuple[float, float]]]:
    unique: list[tuple[float, tuple[float, float]]] = []
    for root, bracket in sorted(roots):
        if unique and root - unique[-1][0] <= DUPLICATE_RELATIVE_DISTANCE * root:
            continue
        unique.append((root, bracket))
    return unique


class CriticalPointService:
    """
    Domain Service: zeros of W'(r) = U'(r) - Lambda^2 / r^3 on the equatorial plane.
    """

    @staticmethod
    def default_scan_radius(bodies: AnnulusBody | BodyStack, angular_momentum: float) -> float:
        """
        Outer end of the exterior scan.

        Far from the plates the stable circular orbit sits near Lambda^2 / mu, so the
        scan reaches max(50 a_out, 4 Lambda^2 / mu).
        """
        stack = BodyStack.coerce(bodies)
        return max(
            ScanSettings.DEFAULT_OUTER_FACTOR * stack.outer_radius,
            4.0 * angular_momentum**2 / stack.total_mu,
        )

    @staticmethod
    def region_of(bodies: AnnulusBody | BodyStack, r: float) -> Region:
        """Region of the equatorial plane containing radius r (edges belong to the plate)."""
        stack = BodyStack.coerce(bodies)
        if r < stack.inner_radius:
            return Region.HOLE
        if r > stack.outer_radius:
            return Region.EXTERIOR
        if stack.member_covering(r) is not None:
            return Region.PLATE_INTERIOR
        return Region.GAP

    @staticmethod
    def classify(bodies: AnnulusBody | BodyStack, angular_momentum: float, r0: float) -> tuple[float, EquilibriumKind]:
        """
        W''(r0) and the kind it implies.

        |W''| <= 1e-8 mu / a_out^3 is degenerate.
        """
        stack = BodyStack.coerce(bodies)
        curvature = EffectivePotentialService.curvature(stack, angular_momentum, r0)
        threshold = ScanSettings.DEGENERACY_FACTOR * stack.total_mu / stack.outer_radius**3
        if abs(curvature) <= threshold:
            logger.warning("Degenerate critical point at r0=%r (W''=%.3e)", r0, curvature)
            return curvature, EquilibriumKind.DEGENERATE
        if curvature > 0.0:
            return curvature, EquilibriumKind.STABLE_MIN
        return curvature, EquilibriumKind.UNSTABLE_MAX

    @staticmethod
    def origin_report(bodies: AnnulusBody | BodyStack) -> EquilibriumReport:
        """
        The centre as a critical point of U (Lambda = 0).

        U' is odd in r, so the curvature is the symmetric difference of its odd extension.
        """
        stack = BodyStack.coerce(bodies)

        def odd_slope(r: float) -> float:
            return float(np.sign(r)) * StackPotentialService.planar_derivative(stack, abs(r))

        step = 1.0e-4 * stack.inner_radius
        curvature = FiniteDifferenceService.derivative(odd_slope, 0.0, step, 0.5 * step)
        kind = EquilibriumKind.UNSTABLE_MAX if curvature < 0.0 else EquilibriumKind.STABLE_MIN
        return EquilibriumReport(
            r0=0.0,
            angular_momentum=0.0,
            residual=0.0,
            curvature=curvature,
            kind=kind,
            region=Region.HOLE,
            bracket=None,
        )

    @staticmethod
    def find_planar_critical_points(
        bodies: AnnulusBody | BodyStack,
        angular_momentum: float,
        r_max: float | None = None,
        regions: tuple[Region, ...] | None = None,
        points_per_region: int = ScanSettings.POINTS_PER_REGION,
        root_tolerance: float = ScanSettings.ROOT_RELATIVE_TOLERANCE,
    ) -> list[EquilibriumReport]:
        """
        Every critical point of W with 0 <= r0 <= r_max, in increasing r0.

        Args:
            bodies: Annulus or stack
            angular_momentum: Lambda >= 0
            r_max: Outer end of the scan, beyond the outermost plate
            regions: Optional subset of regions to scan
            points_per_region: Coarse grid size per region
            root_tolerance: Relative width of the sign-change certificates

        Returns:
            list[EquilibriumReport]: Certified, classified and deduplicated roots

        Raises:
            PreconditionError: If Lambda < 0 or r_max does not exceed the outermost radius
        """
        stack = BodyStack.coerce(bodies)
        if angular_momentum < 0.0:
            raise PreconditionError(f"Angular momentum must be non-negative, got {angular_momentum!r}")
        if r_max is None:
            r_max = CriticalPointService.default_scan_radius(stack, angular_momentum)
        if r_max <= stack.outer_radius:
            raise PreconditionError(f"r_max = {r_max!r} must exceed the outermost radius {stack.outer_radius!r}")

        def slope(r: float) -> float:
            return EffectivePotentialService.slope(stack, angular_momentum, r)

        reports = []
        if angular_momentum == 0.0 and (regions is None or Region.HOLE in regions):
            reports.append(CriticalPointService.origin_report(stack))

        for region, low, high in _intervals(stack, r_max):
            if regions is not None and region not in regions:
                continue
            grid = _grid(region, low, high, points_per_region, ScanSettings.EDGE_REFINEMENT_LEVELS)
            exact, brackets = _brackets(slope, grid, root_tolerance)
            logger.debug(
                "Scan of %s (%r, %r): %d points, %d brackets", region.value, low, high, grid.size, len(brackets)
            )
            roots = [(root, (root, root)) for root in exact]
            for left, right in brackets:
                root = optimize.brentq(slope, left, right, xtol=ROOT_RTOL * left, rtol=ROOT_RTOL)
                roots.append((root, _certificate(slope, root, left, right, root_tolerance)))
            for root, bracket in _deduplicate(roots):
                curvature, kind = CriticalPointService.classify(stack, angular_momentum, root)
                reports.append(
                    EquilibriumReport(
                        r0=root,
                        angular_momentum=angular_momentum,
                        residual=abs(slope(root)),
                        curvature=curvature,
                        kind=kind,
                        region=region,
                        bracket=bracket,
                    )
                )

        logger.info("Located %d critical points at Lambda=%r", len(reports), angular_momentum)
        return reports

    @staticmethod
    def gap_equilibria(stack: BodyStack, angular_momentum: float) -> list[EquilibriumReport]:
        """
        Critical points inside the gaps between consecutive plates.

        W' runs from +inf to -inf across every gap, so each gap holds an odd
        number of roots; an even count is logged as a warning.

        Raises:
            PreconditionError: If the stack has fewer than two members
        """
        stack = BodyStack.coerce(stack)
        if len(stack.annuli) < 2:
            raise PreconditionError("Gap equilibria need a stack of at least two annuli")
        reports = CriticalPointService.find_planar_critical_points(stack, angular_momentum, regions=(Region.GAP,))
        for low, high in stack.gaps:
            count = sum(1 for report in reports if low < report.r0 < high)
            if count % 2 == 0:
                logger.warning("Gap (%r, %r) holds %d critical points at Lambda=%r", low, high, count, angular_momentum)
        return reports
