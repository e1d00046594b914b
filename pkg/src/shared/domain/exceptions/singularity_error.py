"""
SingularityError Module.
"""

from .numerical_domain_error import NumericalDomainError


class SingularityError(NumericalDomainError):
    """
    Raised when a field quantity is evaluated on a singular locus of a body.

    This exception is raised when:
    - The field point lies on a circular wire
    - The field point lies on the edge circle of a plate

    Args:
        message: Description of the singular evaluation
    """

    def __init__(self, message: str = "Field point on a singular locus"):
        super().__init__(message)


class SingularCharacteristicError(SingularityError):
    """
    Raised when the third-kind formulation of the disk potential meets n² = 1.

    The Pi-based closed form fails on the cylinder r = a with z != 0.
    """

    def __init__(self, message: str = "Singular characteristic n^2 = 1 in the third-kind formulation"):
        super().__init__(message)


class FieldDiscontinuityError(NumericalDomainError):
    """
    Raised when the gradient is requested at a point of a plate.

    The potential is a single-layer potential: its normal derivative jumps by
    4*pi*G*sigma across the plate, so the gradient is not defined there.

    Args:
        message: Description of the failure
        normal_jump: Jump (dU/dn)+ - (dU/dn)- of the normal derivative across the plate
    """

    def __init__(self, message: str = "Gradient undefined on the plate", normal_jump: float | None = None):
        self.normal_jump = normal_jump
        super().__init__(message)
