"""
Equilibria Domain Aggregate - Equilibrium Census Aggregate Module.
"""

from dataclasses import replace

from src.equilibria.domain.events import CriticalPointLocatedEvent, GapParityViolatedEvent
from src.equilibria.domain.value_objects import EquilibriumReport, MonodromyResult
from src.potential.domain.value_objects import BodyStack
from src.shared.domain.aggregates import BaseAggregate
from src.shared.domain.enums import Region
from src.shared.domain.exceptions import PreconditionError
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


class EquilibriumCensusAggregate(BaseAggregate):
    """
    Aggregate Root: every planar critical point of W for one body and one Lambda.

    Responsibilities:
    - Hold the reports in increasing r0
    - Check the parity of each gap between consecutive plates
    - Attach monodromy spectra to circular orbits
    - Generate domain events

    Business Invariants:
    - Reports are sorted and share the census angular momentum
    """

    def __init__(self, bodies: BodyStack, angular_momentum: float, reports: list[EquilibriumReport]):
        super().__init__()
        self._bodies = bodies
        self._angular_momentum = angular_momentum
        self._reports = sorted(reports, key=lambda report: report.r0)

        if any(report.angular_momentum != angular_momentum for report in self._reports):
            raise PreconditionError("All reports of a census must share its angular momentum")

    @property
    def bodies(self) -> BodyStack:
        """Get the bodies."""
        return self._bodies

    @property
    def angular_momentum(self) -> float:
        """Get Lambda."""
        return self._angular_momentum

    @property
    def reports(self) -> tuple[EquilibriumReport, ...]:
        """Reports in increasing r0."""
        return tuple(self._reports)

    @staticmethod
    def create(
        bodies: BodyStack, angular_momentum: float, reports: list[EquilibriumReport]
    ) -> "EquilibriumCensusAggregate":
        """
        Factory Method: build the census and emit its events.

        Emits one CriticalPointLocatedEvent per report and a GapParityViolatedEvent
        for each gap whose count is even.
        """
        census = EquilibriumCensusAggregate(bodies, angular_momentum, reports)
        for report in census.reports:
            census._add_domain_event(CriticalPointLocatedEvent(report=report))
        for gap, count in census.gap_counts():
            if count % 2 == 0:
                logger.warning("Gap %s holds %d critical points at Lambda=%r", gap, count, angular_momentum)
                census._add_domain_event(
                    GapParityViolatedEvent(gap=gap, count=count, angular_momentum=angular_momentum)
                )
        return census

    def reports_in(self, region: Region) -> tuple[EquilibriumReport, ...]:
        """Reports of one region."""
        return tuple(report for report in self._reports if report.region is region)

    def count(self, region: Region) -> int:
        """Number of critical points in one region."""
        return len(self.reports_in(region))

    def gap_counts(self) -> list[tuple[tuple[float, float], int]]:
        """(gap, number of critical points inside it) for every gap of the stack."""
        return [
            (gap, sum(1 for report in self.reports_in(Region.GAP) if gap[0] < report.r0 < gap[1]))
            for gap in self._bodies.gaps
        ]

    def circular_orbits(self) -> tuple[EquilibriumReport, ...]:
        """Reports that are circular orbits: Lambda > 0 and off the plates."""
        if self._angular_momentum <= 0.0:
            return ()
        return tuple(report for report in self._reports if report.region is not Region.PLATE_INTERIOR)

    def attach_monodromy(self, r0: float, result: MonodromyResult):
        """Replace the report at r0 by one carrying the monodromy eigenvalues and verdict."""
        for index, report in enumerate(self._reports):
            if report.r0 == r0:
                self._reports[index] = replace(report, eigenvalues=result.eigenvalues, verdict=result.verdict)
                return
        raise PreconditionError(f"No critical point at r0 = {r0!r}")

    def to_dict(self) -> dict:
        """JSON-shaped census."""
        return {
            "bodies": self._bodies.to_dict(),
            "Lambda": self._angular_momentum,
            "counts": {region.value: self.count(region) for region in Region},
            "reports": [report.to_dict() for report in self._reports],
        }
