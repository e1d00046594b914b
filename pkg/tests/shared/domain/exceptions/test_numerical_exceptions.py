"""
Unit Tests for the shared exception hierarchy.

Test categories:
- Inheritance tests
- Default messages and extra attributes
"""

import pytest

from src.shared.domain.exceptions import (
    BracketError,
    ConfigurationError,
    ConvergenceError,
    EllipticDomainError,
    FieldDiscontinuityError,
    IntegrationFailureError,
    NumericalDomainError,
    PreconditionError,
    SingularCharacteristicError,
    SingularityError,
)


class TestHierarchy:
    """The CLI maps exit codes by base class."""

    @pytest.mark.parametrize(
        "error_class",
        [
            BracketError,
            EllipticDomainError,
            FieldDiscontinuityError,
            PreconditionError,
            SingularCharacteristicError,
            SingularityError,
        ],
    )
    def test_numerical_domain_errors(self, error_class):
        """Domain violations share NumericalDomainError."""
        assert issubclass(error_class, NumericalDomainError)
        assert issubclass(error_class, ValueError)

    def test_integration_failure_is_convergence_error(self):
        """Integration failures count as non-convergence."""
        assert issubclass(IntegrationFailureError, ConvergenceError)
        assert not issubclass(ConvergenceError, NumericalDomainError)

    def test_configuration_error_is_separate(self):
        """Configuration problems are not numerical."""
        assert not issubclass(ConfigurationError, NumericalDomainError)


class TestAttributes:
    """Messages and payloads."""

    def test_default_message(self):
        """Every error has a readable default message."""
        assert str(SingularCharacteristicError()) == "Singular characteristic n^2 = 1 in the third-kind formulation"
        assert ConfigurationError().message == "Invalid configuration"

    def test_field_discontinuity_carries_jump(self):
        """The normal-derivative jump travels with the error."""
        error = FieldDiscontinuityError("on plate", normal_jump=-3.5)
        assert error.normal_jump == -3.5
        assert str(error) == "on plate"

    def test_integration_failure_carries_last_state(self):
        """The last accepted time and state are kept."""
        error = IntegrationFailureError("step size underflow", last_time=1.5, last_state=(1.0, 0.0, 0.0))
        assert error.last_time == 1.5
        assert error.last_state == (1.0, 0.0, 0.0)
        assert error.message == "step size underflow"
