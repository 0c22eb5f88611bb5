"""Equilibria on the segment S = 0, their spectra and stability classes.

Every point of the segment {S = 0, I + R = 1} is an equilibrium, so none
can be asymptotically stable: the classifier only knows Stable, Unstable
and Marginal. At an equilibrium the planar Jacobian has eigenvalues
{0, tau} and the full Jacobian {0, 0, tau}, with
tau = mu * ((rho1 + rho2) * I - rho1).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from config.simulation_config import SimOptions
from ..exceptions import DomainError, InvalidParamsError
from ..models import ModelId, Params, State2, components, field_for, planar_field
from ..utils.finite_difference import FD_STEP, central_difference_jacobian, max_relative_error
from .integrator import simulate_planar

logger = logging.getLogger(__name__)

TIE_TOL = 1e-12


class StabilityClass(str, Enum):
    STABLE = 'Stable'
    UNSTABLE = 'Unstable'
    MARGINAL = 'Marginal'


@dataclass(frozen=True)
class EquilibriumReport:
    """Spectrum and class of one point of the equilibrium segment."""

    point: State2
    eigen_planar: Tuple[float, float]
    eigen_full: Tuple[float, float, float]
    stability_class: StabilityClass
    sigma: float

    @property
    def tau(self) -> float:
        return self.eigen_planar[1]

    def to_dict(self) -> dict:
        return {
            'I': self.point.i,
            'R': self.point.r,
            'tau': self.tau,
            'class': self.stability_class.value,
        }


@dataclass(frozen=True)
class BoundaryFlowReport:
    """Field samples on the edges of Omega.

    Attributes:
        max_i_rate_bottom: max |I'| on the edge I = 0 (should be 0)
        min_r_rate: min R' over both axis edges (should be >= 0)
        max_i_rate_left: max I' on the edge R = 0 (should be <= 0)
        max_rate_segment: max |field| on the equilibrium segment (should be 0)
        inward: No sample points out of Omega
    """

    max_i_rate_bottom: float
    min_r_rate: float
    max_i_rate_left: float
    max_rate_segment: float
    inward: bool


def _check_unit_interval(i_star: float):
    if not (math.isfinite(i_star) and 0.0 <= i_star <= 1.0):
        raise DomainError(f"equilibrium Ignorant fraction must lie in [0, 1], got {i_star!r}")


def threshold_sigma(p: Params) -> float:
    """sigma = rho1 / (rho1 + rho2), the Ignorant level separating stable from unstable equilibria."""
    return p.sigma


def _tau(p: Params, i_star: float) -> float:
    return p.mu * ((p.rho1 + p.rho2) * i_star - p.rho1)


def eigen_full_at_equilibrium(p: Params, i_star: float) -> Tuple[float, float, float]:
    """Spectrum of the full Jacobian at (I, S, R) = (i_star, 0, 1 - i_star).

    The Jacobian there has rank one; its single nonzero eigenvalue equals
    the planar tau.
    """
    _check_unit_interval(i_star)
    return (0.0, 0.0, _tau(p, i_star))


def classify_equilibrium(p: Params, i_star: float, tie_tol: float = TIE_TOL) -> EquilibriumReport:
    """Classify the equilibrium (R, I) = (1 - i_star, i_star).

    Args:
        p: Model rates
        i_star: Ignorant fraction of the equilibrium
        tie_tol: |tau| below which the point is Marginal

    Raises:
        DomainError: If i_star is outside [0, 1]
    """
    _check_unit_interval(i_star)
    tau = _tau(p, i_star)
    if tau < -tie_tol:
        stability_class = StabilityClass.STABLE
    elif tau > tie_tol:
        stability_class = StabilityClass.UNSTABLE
    else:
        stability_class = StabilityClass.MARGINAL
    return EquilibriumReport(
        point=State2(1.0 - i_star, i_star),
        eigen_planar=(0.0, tau),
        eigen_full=(0.0, 0.0, tau),
        stability_class=stability_class,
        sigma=threshold_sigma(p),
    )


def equilibrium_scan(p: Params, n: int, tie_tol: float = TIE_TOL) -> List[EquilibriumReport]:
    """Classify n evenly spaced equilibria I = 0, 1/(n-1), ..., 1."""
    if n < 2:
        raise InvalidParamsError(f"scan needs at least 2 points, got {n}")
    return [classify_equilibrium(p, float(i), tie_tol) for i in np.linspace(0.0, 1.0, n)]


def jacobian_fd_check(
    model: ModelId,
    p: Optional[Params],
    point,
    analytic: Optional[np.ndarray] = None,
    eps: float = FD_STEP
) -> float:
    """Compare an analytic Jacobian with central differences of the field.

    Args:
        model: Which vector field
        p: Rates (ignored by the Belen-Pearce models)
        point: State in model coordinates
        analytic: Matrix to test; defaults to the model's own Jacobian
        eps: Finite-difference step

    Returns:
        max |analytic - fd| / (1 + |analytic|) over entries
    """
    field = field_for(model, p)
    x = np.array(components(point, field.dimension))
    if analytic is None:
        analytic = field.jacobian(x)
    approximate = central_difference_jacobian(field.evaluate, x, eps)
    error = max_relative_error(analytic, approximate)
    logger.debug("Jacobian check for %s at %s: %.3e", ModelId(model).value, x.tolist(), error)
    return error


def boundary_flow(p: Params, n: int = 101) -> BoundaryFlowReport:
    """Sample the planar field on the three edges of Omega."""
    grid = np.linspace(0.0, 1.0, n)
    bottom = np.array([planar_field(p, (r, 0.0)) for r in grid])
    left = np.array([planar_field(p, (0.0, i)) for i in grid])
    segment = np.array([planar_field(p, (1.0 - i, i)) for i in grid])

    max_i_rate_bottom = float(np.max(np.abs(bottom[:, 1])))
    min_r_rate = float(min(bottom[:, 0].min(), left[:, 0].min()))
    max_i_rate_left = float(left[:, 1].max())
    max_rate_segment = float(np.max(np.abs(segment)))
    inward = (max_i_rate_bottom == 0.0 and min_r_rate >= 0.0
              and max_i_rate_left <= 0.0 and max_rate_segment == 0.0)
    return BoundaryFlowReport(max_i_rate_bottom, min_r_rate, max_i_rate_left, max_rate_segment, inward)


def probe_equilibrium(
    p: Params,
    i_star: float,
    offset: float = 5e-4,
    t_end: float = 100.0,
    step: float = 1e-2
) -> float:
    """Largest excursion from an equilibrium of trajectories started next to it.

    Starts are shifted by `offset` into Omega (lower R, lower I, or both)
    and integrated on the planar system.

    Returns:
        Max Euclidean distance from the equilibrium over all records
    """
    _check_unit_interval(i_star)
    r_star = 1.0 - i_star
    shifts = [(-offset, 0.0), (0.0, -offset), (-0.6 * offset, -0.6 * offset)]
    options = SimOptions(step=step, t_end=t_end, stop_s_below=0.0, record_every=1)

    excursion = 0.0
    for dr, di in shifts:
        r0, i0 = r_star + dr, i_star + di
        if r0 < 0 or i0 < 0:
            continue
        trajectory = simulate_planar(p, State2(r0, i0), options)
        distance = np.hypot(trajectory.r - r_star, trajectory.i - i_star)
        excursion = max(excursion, float(distance.max()))
    return excursion
