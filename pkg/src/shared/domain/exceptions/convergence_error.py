"""
ConvergenceError Module.
"""


class ConvergenceError(ArithmeticError):
    """
    Raised when an iterative numerical method does not reach its tolerance.

    This exception is raised when:
    - Adaptive quadrature exhausts its subdivision budget
    - An error estimate stays above the requested tolerance

    Args:
        message: Description of the convergence failure
    """

    def __init__(self, message: str = "Numerical method did not converge"):
        """
        Initialize ConvergenceError.
        """
        self.message = message
        super().__init__(self.message)


class IntegrationFailureError(ConvergenceError):
    """
    Raised when trajectory integration cannot proceed.

    Args:
        message: Description of the failure
        last_time: Time of the last accepted state
        last_state: Last accepted state vector
    """

    def __init__(
        self,
        message: str = "Trajectory integration failed",
        last_time: float | None = None,
        last_state: tuple[float, ...] | None = None,
    ):
        self.last_time = last_time
        self.last_state = last_state
        super().__init__(message)
