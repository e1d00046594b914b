"""
Shared pytest fixtures for tests.
"""

import pytest

from src.potential.domain.value_objects import AnnulusBody, BodyStack, DiskBody, WireBody


@pytest.fixture
def reference_annulus():
    """Reference annulus a=1, b=0.75, mu=1."""
    return AnnulusBody(a=1.0, b=0.75, mu=1.0)


@pytest.fixture
def unit_disk():
    """Solid disk a=1, mu=1."""
    return DiskBody(a=1.0, mu=1.0)


@pytest.fixture
def unit_wire():
    """Circular wire a=1, mu=1."""
    return WireBody(a=1.0, mu=1.0)


@pytest.fixture
def two_ring_stack():
    """Stack of [0.3, 0.5] and [0.75, 1] with mu=0.5 each (gap 0.5 < r < 0.75)."""
    return BodyStack.of(AnnulusBody(a=0.5, b=0.3, mu=0.5), AnnulusBody(a=1.0, b=0.75, mu=0.5))
