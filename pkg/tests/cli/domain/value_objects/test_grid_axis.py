"""
Unit Tests for GridAxis.

Test categories:
- Parsing tests
- Validation tests
- Sampling tests
"""

import pytest

from src.cli.domain.value_objects import GridAxis
from src.shared.domain.exceptions import ConfigurationError


class TestParse:
    """Tests for the name=start:stop:count syntax."""

    def test_range(self):
        """x=-2:2:101."""
        assert GridAxis.parse("x=-2:2:101") == GridAxis("x", -2.0, 2.0, 101)

    def test_single_value(self):
        """y=0.5 is one sample."""
        assert GridAxis.parse("y=0.5") == GridAxis("y", 0.5, 0.5, 1)

    @pytest.mark.parametrize("text", ["x", "x=1:2", "x=a:2:3", "x=0:1:2.5", "x=inf", "w=0:1:3", "x=0:1:0", "x=0:1:1"])
    def test_malformed(self, text):
        """Malformed axes are configuration errors."""
        with pytest.raises(ConfigurationError):
            GridAxis.parse(text)


class TestValues:
    """Tests for sampling and serialization."""

    def test_endpoints_included(self):
        """linspace with both ends."""
        assert list(GridAxis("z", 0.0, 1.0, 5).values()) == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_list_form(self):
        """[start, stop, count] in both directions."""
        axis = GridAxis("x", -1.0, 1.0, 3)
        assert axis.to_list() == [-1.0, 1.0, 3]
        assert GridAxis.from_list("x", axis.to_list()) == axis

    def test_bad_list(self):
        """The list form needs three entries."""
        with pytest.raises(ConfigurationError):
            GridAxis.from_list("x", [0.0, 1.0])
