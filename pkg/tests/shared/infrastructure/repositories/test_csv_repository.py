"""
Unit Tests for CSVRepository and CSVTableRepository.

Test categories:
- Metadata header tests
- Table round trip through pandas
- File layout tests
"""

# pylint: disable=redefined-outer-name

import math

import pandas as pd
import pytest

from src.shared.infrastructure.repositories import CSVTableRepository


@pytest.fixture
def frame():
    """Small field table with a missing value."""
    return pd.DataFrame({"r": [0.5, 1.0, 2.0], "z": [0.0, 0.0, 0.1], "U": [-1.1428571428571428, float("nan"), -0.49]})


@pytest.fixture
def metadata():
    """Provenance entries."""
    return {"command": "eval", "body": {"type": "annulus", "a": 1.0, "b": 0.75, "mu": 1.0}, "version": "1.0.0"}


class TestCSVTableRepository:
    """Tests for the CSV table repository."""

    def test_header_lines(self, tmp_path, frame, metadata):
        """Metadata lines come first as '# key: json' in insertion order."""
        path = CSVTableRepository(tmp_path / "eval.csv").save(frame, metadata)
        lines = path.read_text(encoding="utf-8").splitlines()

        assert lines[0] == '# command: "eval"'
        assert lines[1] == '# body: {"type": "annulus", "a": 1.0, "b": 0.75, "mu": 1.0}'
        assert lines[2] == '# version: "1.0.0"'
        assert lines[3] == "r,z,U"

    def test_missing_values_are_empty_cells(self, tmp_path, frame, metadata):
        """NaN is written as an empty cell."""
        path = CSVTableRepository(tmp_path / "eval.csv").save(frame, metadata)

        assert "1.0,0.0,\n" in path.read_text(encoding="utf-8")

    def test_round_trip(self, tmp_path, frame, metadata):
        """Table and metadata load back unchanged."""
        repository = CSVTableRepository(tmp_path / "nested" / "eval.csv")
        repository.save(frame, metadata)

        loaded = repository.load()
        assert list(loaded.columns) == ["r", "z", "U"]
        assert loaded["U"].iloc[0] == -1.1428571428571428
        assert math.isnan(loaded["U"].iloc[1])
        assert repository.load_metadata() == metadata

    def test_equal_inputs_give_identical_files(self, tmp_path, frame, metadata):
        """Writing twice yields byte-identical files."""
        first = CSVTableRepository(tmp_path / "first.csv").save(frame, metadata)
        second = CSVTableRepository(tmp_path / "second.csv").save(frame, metadata)

        assert first.read_bytes() == second.read_bytes()
