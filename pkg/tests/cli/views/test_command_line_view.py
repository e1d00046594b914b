"""
Unit Tests for CommandLineView.

Test categories:
- Argument parsing and overrides
- Exit codes and error records
- Dispatch to the command services
"""

# pylint: disable=redefined-outer-name

import json
from unittest.mock import Mock, patch

import pytest

from src.cli.application.dtos import CommandResultDTO
from src.cli.domain.value_objects import RunConfig
from src.cli.views import CommandLineView, exit_code_for
from src.shared.domain.exceptions import (
    BracketError,
    ConfigurationError,
    EllipticDomainError,
    IntegrationFailureError,
    SingularityError,
)


@pytest.fixture
def run_config_service():
    """Mock configuration service resolving to an orbit run."""
    service = Mock()
    service.resolve.return_value = RunConfig(
        command="orbit", output="orbit.csv", parameters={"state": [3, 0, 0, 0, 0.6, 0]}
    )
    return service


@pytest.fixture
def command_service():
    """Mock command service."""
    service = Mock()
    service.execute.return_value = CommandResultDTO(
        command="orbit", outputs=("orbit.csv", "orbit.csv.config.json"), summary={"reason": "time-limit"}
    )
    return service


@pytest.fixture
def view(run_config_service, command_service):
    """View with mocked services."""
    return CommandLineView(run_config_service, lambda config: command_service, version="1.0.0")


def overrides_for(view, argv):
    """Overrides produced by a command line."""
    return view.overrides(view.build_parser().parse_args(argv))


class TestOverrides:
    """Tests for turning flags into configuration overrides."""

    def test_eval_grid(self, view):
        """Grid axes become [start, stop, count] lists."""
        result = overrides_for(view, ["eval", "--grid", "x=-2:2:5", "z=0.1", "--oracle", "-o", "f.csv"])

        assert result["command"] == "eval"
        assert result["output"] == "f.csv"
        assert result["parameters"] == {"axes": {"x": [-2.0, 2.0, 5], "z": [0.1, 0.1, 1]}, "oracle": True}
        assert result["body"] is None

    def test_single_annulus(self, view):
        """One --annulus is an annulus body."""
        result = overrides_for(view, ["equilibria", "--annulus", "1", "0.75", "1", "--lambda", "2.5"])

        assert result["body"] == {"type": "annulus", "a": 1.0, "b": 0.75, "mu": 1.0}
        assert result["parameters"] == {"Lambda": 2.5}

    def test_stack(self, view):
        """Repeated --annulus builds a stack."""
        result = overrides_for(view, ["equilibria", "--annulus", "0.5", "0.3", "0.5", "--annulus", "1", "0.75", "0.5"])

        assert result["body"]["type"] == "stack"
        assert len(result["body"]["annuli"]) == 2

    def test_tolerances_and_threads(self, view):
        """Only given tolerances are overridden."""
        result = overrides_for(view, ["orbit", "--state", "3,0,0,0,0.6,0", "--rtol", "1e-10", "--threads", "4"])

        assert result["tolerances"] == {"rtol": 1e-10}
        assert result["threads"] == 4
        assert result["parameters"] == {"state": [3.0, 0.0, 0.0, 0.0, 0.6, 0.0]}

    def test_body_json(self, view):
        """--body takes a JSON record."""
        body = '{"type": "disk", "a": 1, "mu": 1}'
        result = overrides_for(view, ["bifurcation", "--body", body, "--bracket", "0.1", "3"])

        assert result["body"] == {"type": "disk", "a": 1, "mu": 1}
        assert result["parameters"] == {"bracket": [0.1, 3.0]}

    def test_portrait_flags(self, view):
        """Portrait options map to parameter names."""
        result = overrides_for(
            view, ["portrait", "--mode", "planar", "--lambda", "2", "3", "--r-range", "1.5", "10", "--emit-wprime"]
        )

        assert result["parameters"] == {
            "mode": "planar",
            "Lambda": [2.0, 3.0],
            "r_range": [1.5, 10.0],
            "emit_wprime": True,
        }

    def test_body_flags_are_exclusive(self, view):
        """--disk and --wire cannot be combined."""
        with pytest.raises(ConfigurationError):
            view.build_parser().parse_args(["eval", "--disk", "1", "1", "--wire", "1", "1"])


class TestExitCodes:
    """Tests for the failure mapping."""

    @pytest.mark.parametrize(
        ("error", "code"),
        [
            (ConfigurationError("bad"), 2),
            (EllipticDomainError(), 3),
            (SingularityError(), 3),
            (BracketError(), 3),
            (IntegrationFailureError(), 4),
            (RuntimeError("boom"), 1),
        ],
    )
    def test_exit_code_for(self, error, code):
        """Configuration 2, numerical domain 3, convergence 4, anything else 1."""
        assert exit_code_for(error) == code

    def test_unknown_flag(self, view, capsys):
        """Usage errors exit with 2 and one JSON record on stderr."""
        with patch("src.cli.views.command_line_view.setup_logging"):
            code = view.run(["eval", "--colour", "red"])

        record = json.loads(capsys.readouterr().err.strip())
        assert code == 2
        assert record["error"] == "ConfigurationError"
        assert record["exit_code"] == 2
        assert "--colour" in record["message"]

    def test_numerical_failure(self, view, command_service, capsys):
        """Errors raised by a command keep their exit code."""
        command_service.execute.side_effect = BracketError("same count at both ends")
        with patch("src.cli.views.command_line_view.setup_logging"):
            code = view.run(["bifurcation"])

        assert code == 3
        assert json.loads(capsys.readouterr().err)["message"] == "same count at both ends"


class TestRun:
    """Tests for dispatching a command."""

    def test_success(self, view, run_config_service, command_service):
        """The resolved configuration is handed to the command service."""
        with patch("src.cli.views.command_line_view.setup_logging") as mock_setup:
            code = view.run(["orbit", "--state", "3,0,0,0,0.6,0", "--log-level", "debug", "--config", "runs.json"])

        assert code == 0
        mock_setup.assert_called_once_with(10)
        path, overrides = run_config_service.resolve.call_args[0]
        assert path == "runs.json"
        assert overrides["command"] == "orbit"
        command_service.execute.assert_called_once_with(run_config_service.resolve.return_value)

    def test_bad_log_level(self, view, command_service):
        """Unknown log levels are configuration errors."""
        code = view.run(["orbit", "--log-level", "loud"])

        assert code == 2
        command_service.execute.assert_not_called()
