"""Central finite differences for gradients and Jacobians."""

import logging
from typing import Callable

import numpy as np

logger = logging.getLogger(__name__)

FD_STEP = 1e-6


def central_difference_gradient(
    func: Callable[[np.ndarray], float],
    x: np.ndarray,
    eps: float = FD_STEP
) -> np.ndarray:
    """Centered-difference gradient of a scalar function.

    Args:
        func: Scalar function of a vector
        x: Evaluation point
        eps: Step applied to one coordinate at a time

    Returns:
        Gradient vector with the shape of x
    """
    x0 = np.asarray(x, dtype=float)
    grad = np.zeros(len(x0))
    for j in range(len(x0)):
        x = x0.copy()
        x[j] = x0[j] + eps
        fplus = func(x)
        x[j] = x0[j] - eps
        fminus = func(x)
        grad[j] = (fplus - fminus) / (2 * eps)
    return grad


def central_difference_jacobian(
    func: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    eps: float = FD_STEP
) -> np.ndarray:
    """Centered-difference Jacobian of a vector function; column j is d func / d x_j."""
    x0 = np.asarray(x, dtype=float)
    columns = []
    for j in range(len(x0)):
        x = x0.copy()
        x[j] = x0[j] + eps
        fplus = np.asarray(func(x), dtype=float)
        x[j] = x0[j] - eps
        fminus = np.asarray(func(x), dtype=float)
        columns.append((fplus - fminus) / (2 * eps))
    jac = np.column_stack(columns)
    logger.debug("finite-difference Jacobian at %s: %s", x0, jac.tolist())
    return jac


def max_relative_error(analytic: np.ndarray, approximate: np.ndarray) -> float:
    """max |analytic - approximate| / (1 + |analytic|) over entries."""
    analytic = np.asarray(analytic, dtype=float)
    return float(np.max(np.abs(analytic - approximate) / (1.0 + np.abs(analytic))))
