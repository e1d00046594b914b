"""
src.shared.domain.exceptions - Shared Kernel Domain Exceptions module.
"""

from .numerical_domain_error import BracketError, EllipticDomainError, NumericalDomainError, PreconditionError
from .singularity_error import FieldDiscontinuityError, SingularCharacteristicError, SingularityError
from .convergence_error import ConvergenceError, IntegrationFailureError
from .configuration_error import ConfigurationError

__all__ = [
    "BracketError",
    "ConfigurationError",
    "ConvergenceError",
    "EllipticDomainError",
    "FieldDiscontinuityError",
    "IntegrationFailureError",
    "NumericalDomainError",
    "PreconditionError",
    "SingularCharacteristicError",
    "SingularityError",
]
