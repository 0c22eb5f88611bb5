"""Analytic Jacobians of the vector fields.

jacobian3 is differentiated from the Piqueira system itself.
jacobian3_printed is the published variant with a wrong first row and a
sign flip on 2*rho1*S; the finite-difference check flags it.
"""

import numpy as np

from .params import Params
from .state import components


def jacobian3(p: Params, x) -> np.ndarray:
    """Jacobian of the Piqueira field at (I, S, R); every column sums to 0."""
    i, s, r = components(x, 3)
    rho1, rho2 = p.rho1, p.rho2
    matrix = np.array([
        [-rho2 * s, -rho2 * i, 0.0],
        [rho2 * s, rho2 * i - 2.0 * rho1 * s - rho1 * r, -rho1 * s],
        [0.0, 2.0 * rho1 * s + rho1 * r, rho1 * s],
    ])
    return p.mu * matrix


def jacobian3_printed(p: Params, x) -> np.ndarray:
    """Published full-system Jacobian with the erroneous first row and sign."""
    i, s, r = components(x, 3)
    rho1, rho2 = p.rho1, p.rho2
    matrix = np.array([
        [-rho2, 0.0, 0.0],
        [rho2 * s, rho2 * i + 2.0 * rho1 * s - rho1 * r, -rho1 * s],
        [0.0, 2.0 * rho1 * s + rho1 * r, rho1 * s],
    ])
    return p.mu * matrix


def jacobian2(p: Params, y) -> np.ndarray:
    """Jacobian of the planar Piqueira field, rows and columns ordered (R, I).

    On the equilibrium segment R + I = 1 this reduces to
    mu * [[rho1*I - rho1, rho1*I - rho1], [rho2*I, rho2*I]].
    """
    r, i = components(y, 2)
    rho1, rho2 = p.rho1, p.rho2
    matrix = np.array([
        [-rho1 * (1.0 - i), -rho1 * ((1.0 - i) + (1.0 - i - r))],
        [rho2 * i, rho2 * (2.0 * i + r - 1.0)],
    ])
    return p.mu * matrix


def jacobian_bp3(x) -> np.ndarray:
    """Jacobian of the Belen-Pearce field at (I, S, R)."""
    i, s, _ = components(x, 3)
    return np.array([
        [-s, -i, 0.0],
        [2.0 * s, -(1.0 - 2.0 * i), 0.0],
        [-s, 1.0 - i, 0.0],
    ])


def jacobian_bp2(y) -> np.ndarray:
    """Jacobian of the planar Belen-Pearce field at (I, S)."""
    i, s = components(y, 2)
    return np.array([
        [-s, -i],
        [2.0 * s, -(1.0 - 2.0 * i)],
    ])
