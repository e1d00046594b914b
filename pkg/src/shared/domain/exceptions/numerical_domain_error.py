"""
NumericalDomainError Module.
"""


class NumericalDomainError(ValueError):
    """
    Raised when an argument lies outside the mathematical domain of an operation.

    This is the common base of every error that the CLI reports with the
    numerical-domain exit code.

    Args:
        message: Description of the domain violation
    """

    def __init__(self, message: str = "Argument outside the domain of the operation"):
        """
        Initialize NumericalDomainError.
        """
        self.message = message
        super().__init__(self.message)


class EllipticDomainError(NumericalDomainError):
    """
    Raised when an elliptic integral is evaluated outside its domain.

    This exception is raised when:
    - The parameter m is at or beyond the logarithmic singularity m = 1
    - The characteristic n² equals 1
    - The amplitude phi is outside [0, pi/2]
    """

    def __init__(self, message: str = "Elliptic integral argument outside its domain"):
        super().__init__(message)


class PreconditionError(NumericalDomainError):
    """
    Raised when the preconditions of an operation are not satisfied.

    This exception is raised when:
    - A circular orbit does not satisfy the circularity condition
    - A trajectory starts on a plate
    - An operation receives a body type it does not support
    """

    def __init__(self, message: str = "Operation precondition violated"):
        super().__init__(message)


class BracketError(NumericalDomainError):
    """
    Raised when a search bracket does not enclose a change of the searched quantity.
    """

    def __init__(self, message: str = "Invalid search bracket"):
        super().__init__(message)
