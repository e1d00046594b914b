"""
Shared Domain Service - Finite Difference Service Module.
"""

from collections.abc import Callable

import numpy as np

from src.shared.domain.constants import DerivativeSettings


class FiniteDifferenceService:
    """
    Domain Service: Richardson-extrapolated central differences.

    With D(h) = (f(x + h) - f(x - h)) / 2h and the fine step h/2, the value
    (4 D(h/2) - D(h)) / 3 cancels the h**2 error term. The default steps
    1e-4 / 5e-5 give roughly 1e-7 absolute accuracy on the closed forms, which
    is what the stability classifications need.
    """

    @staticmethod
    def derivative(
        function: Callable[[float], float],
        x: float,
        step: float = DerivativeSettings.COARSE_STEP,
        fine_step: float = DerivativeSettings.FINE_STEP,
    ) -> float:
        """
        First derivative of a scalar function of one variable.

        Args:
            function: Scalar function
            x: Evaluation point
            step: Coarse step h
            fine_step: Fine step, normally h/2

        Returns:
            float: Extrapolated derivative
        """
        coarse = (function(x + step) - function(x - step)) / (2.0 * step)
        fine = (function(x + fine_step) - function(x - fine_step)) / (2.0 * fine_step)
        ratio = (step / fine_step) ** 2
        return (ratio * fine - coarse) / (ratio - 1.0)

    @staticmethod
    def directional(
        function: Callable[[np.ndarray], np.ndarray],
        point: np.ndarray,
        axis: int,
        step: float = DerivativeSettings.COARSE_STEP,
        fine_step: float = DerivativeSettings.FINE_STEP,
    ) -> np.ndarray:
        """Derivative of a vector-valued function along one coordinate axis."""
        point = np.asarray(point, dtype=float)

        def central(h: float) -> np.ndarray:
            shift = np.zeros_like(point)
            shift[axis] = h
            return (np.asarray(function(point + shift)) - np.asarray(function(point - shift))) / (2.0 * h)

        ratio = (step / fine_step) ** 2
        return (ratio * central(fine_step) - central(step)) / (ratio - 1.0)

    @staticmethod
    def jacobian(
        function: Callable[[np.ndarray], np.ndarray],
        point: np.ndarray,
        step: float = DerivativeSettings.COARSE_STEP,
        fine_step: float = DerivativeSettings.FINE_STEP,
    ) -> np.ndarray:
        """
        Jacobian matrix J[i, j] = d f_i / d x_j.

        Args:
            function: Vector-valued function of a vector
            point: Evaluation point

        Returns:
            np.ndarray: Square or rectangular Jacobian
        """
        point = np.asarray(point, dtype=float)
        columns = [
            FiniteDifferenceService.directional(function, point, axis, step, fine_step) for axis in range(point.size)
        ]
        return np.column_stack(columns)

    @staticmethod
    def hessian_from_gradient(
        gradient: Callable[[np.ndarray], np.ndarray],
        point: np.ndarray,
        step: float = DerivativeSettings.COARSE_STEP,
        fine_step: float = DerivativeSettings.FINE_STEP,
    ) -> np.ndarray:
        """
        Symmetrised Hessian obtained by differencing a gradient.

        Returns:
            np.ndarray: (H + H^T) / 2
        """
        hessian = FiniteDifferenceService.jacobian(gradient, point, step, fine_step)
        return 0.5 * (hessian + hessian.T)
