"""
Unit Tests for the body value objects.

Test categories:
- Construction and validation
- Derived densities and energies
- Stack ordering, gaps and membership
"""

import math

import pytest

from src.potential.domain.value_objects import AnnulusBody, BodyStack, DiskBody, FieldPoint, FieldSample, WireBody
from src.shared.domain.enums import BodyType
from src.shared.domain.exceptions import NumericalDomainError, PreconditionError


class TestBodyValidation:
    """Tests for rejected parameters."""

    @pytest.mark.parametrize(("a", "b", "mu"), [(1.0, 1.0, 1.0), (0.5, 0.75, 1.0), (1.0, 0.5, 0.0), (1.0, -0.1, 1.0)])
    def test_invalid_annulus(self, a, b, mu):
        """0 < b < a and mu > 0 are required."""
        with pytest.raises(PreconditionError):
            AnnulusBody(a=a, b=b, mu=mu)

    def test_invalid_disk_and_wire(self):
        """Radii and mu must be positive and finite."""
        with pytest.raises(PreconditionError):
            DiskBody(a=0.0, mu=1.0)
        with pytest.raises(PreconditionError):
            WireBody(a=1.0, mu=math.inf)

    def test_precondition_is_numerical_domain_error(self):
        """Invalid bodies surface as numerical-domain errors."""
        with pytest.raises(NumericalDomainError):
            AnnulusBody(a=1.0, b=2.0, mu=1.0)


class TestDerivedQuantities:
    """Tests for densities and energies."""

    def test_annulus_surface_density(self, reference_annulus):
        """G sigma = mu / (pi (a^2 - b^2))."""
        assert reference_annulus.surface_density == pytest.approx(1.0 / (math.pi * 0.4375))
        assert reference_annulus.normal_jump == pytest.approx(4.0 / 0.4375)

    def test_origin_energy(self, reference_annulus):
        """E* = -2 mu / (a + b) = -8/7."""
        assert reference_annulus.origin_energy == pytest.approx(-8.0 / 7.0, abs=1e-15)

    def test_wire_and_disk_densities(self, unit_wire, unit_disk):
        """Line and surface densities."""
        assert unit_wire.linear_density == pytest.approx(1.0 / (2.0 * math.pi))
        assert unit_disk.surface_density == pytest.approx(1.0 / math.pi)

    def test_to_dict(self, reference_annulus, unit_disk):
        """Records carry the type tag."""
        assert reference_annulus.to_dict() == {"type": "annulus", "a": 1.0, "b": 0.75, "mu": 1.0}
        assert unit_disk.to_dict()["type"] == BodyType.DISK.value


class TestBodyStack:
    """Tests for stacks of annuli."""

    def test_of_sorts_members(self, two_ring_stack):
        """Members are ordered by inner radius."""
        assert [member.b for member in two_ring_stack.annuli] == [0.3, 0.75]

    def test_overlapping_members_rejected(self):
        """Radial intervals must be disjoint."""
        with pytest.raises(PreconditionError):
            BodyStack.of(AnnulusBody(a=0.8, b=0.3, mu=1.0), AnnulusBody(a=1.0, b=0.75, mu=1.0))

    def test_empty_stack_rejected(self):
        """A stack needs a member."""
        with pytest.raises(PreconditionError):
            BodyStack(())

    def test_gaps_and_edges(self, two_ring_stack):
        """Gaps lie between consecutive plates."""
        assert two_ring_stack.gaps == ((0.5, 0.75),)
        assert two_ring_stack.edge_radii == (0.3, 0.5, 0.75, 1.0)
        assert two_ring_stack.total_mu == pytest.approx(1.0)

    def test_member_covering(self, two_ring_stack):
        """Closed plates contain their edges."""
        assert two_ring_stack.member_covering(0.4).a == 0.5
        assert two_ring_stack.member_covering(0.75).b == 0.75
        assert two_ring_stack.member_covering(0.6) is None

    def test_coerce(self, reference_annulus):
        """A single annulus becomes a one-member stack."""
        stack = BodyStack.coerce(reference_annulus)
        assert stack.annuli == (reference_annulus,)
        assert BodyStack.coerce(stack) is stack
        with pytest.raises(PreconditionError):
            BodyStack.coerce(DiskBody(a=1.0, mu=1.0))

    def test_stack_origin_energy_is_additive(self, two_ring_stack):
        """E* of a stack is the sum of member values."""
        expected = -2.0 * 0.5 / 0.8 - 2.0 * 0.5 / 1.75
        assert two_ring_stack.origin_energy == pytest.approx(expected)


class TestFieldValueObjects:
    """Tests for field points and samples."""

    def test_field_point_radii(self):
        """Cylindrical and spherical radii."""
        point = FieldPoint(3.0, 4.0, 12.0)
        assert point.r == pytest.approx(5.0)
        assert point.big_r == pytest.approx(13.0)

    def test_non_finite_point_rejected(self):
        """Coordinates must be finite."""
        with pytest.raises(NumericalDomainError):
            FieldPoint(float("nan"), 0.0, 0.0)

    def test_sample_flags(self):
        """Plate and edge samples carry no gradient."""
        assert FieldSample(potential=-1.0, gradient=None, on_plate=True, normal_jump=2.0).flags == "on_plate"
        assert FieldSample(potential=None, gradient=None, on_edge=True).flags == "on_edge"
        with pytest.raises(NumericalDomainError):
            FieldSample(potential=-1.0, gradient=(0.0, 0.0, 0.0), on_plate=True)
