"""
Unit Tests for JSONReportRepository.

Test categories:
- Save tests
- Load error tests
"""

import json

import pytest

from src.shared.domain.exceptions import ConfigurationError
from src.shared.infrastructure.repositories import JSONReportRepository


class TestSave:
    """Tests for writing records."""

    def test_non_finite_values_become_null(self, tmp_path):
        """inf and nan are written as null at any depth."""
        record = {"residual": float("inf"), "roots": [{"r0": 1.5, "curvature": float("nan")}], "count": 2}
        path = JSONReportRepository(tmp_path / "report.json").save(record)

        assert json.loads(path.read_text(encoding="utf-8")) == {
            "residual": None,
            "roots": [{"r0": 1.5, "curvature": None}],
            "count": 2,
        }

    def test_format(self, tmp_path):
        """Two-space indentation and a trailing newline."""
        path = JSONReportRepository(tmp_path / "out" / "report.json").save({"a": 1})

        assert path.read_text(encoding="utf-8") == '{\n  "a": 1\n}\n'

    def test_round_trip(self, tmp_path):
        """Floats load back exactly."""
        repository = JSONReportRepository(tmp_path / "report.json")
        repository.save({"lambda_star": 2.0857362843, "tuple": (1, 2)})

        assert repository.load() == {"lambda_star": 2.0857362843, "tuple": [1, 2]}


class TestLoadErrors:
    """Tests for unreadable files."""

    def test_missing_file(self, tmp_path):
        """A missing file is a configuration error."""
        with pytest.raises(ConfigurationError, match="not found"):
            JSONReportRepository(tmp_path / "absent.json").load()

    def test_malformed_json(self, tmp_path):
        """Malformed JSON is a configuration error."""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")

        with pytest.raises(ConfigurationError, match="Malformed"):
            JSONReportRepository(path).load()

    def test_non_object(self, tmp_path):
        """The top level must be an object."""
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")

        with pytest.raises(ConfigurationError, match="JSON object"):
            JSONReportRepository(path).load()
