"""Asymptotic rumor size from the level sets of the first integral.

Trajectories of the planar Piqueira system stay on a level line H = k and
end on the equilibrium segment R = 1 - I below the threshold sigma. On the
segment H reduces to phi(I) = (1 - I)/rho1 + log(I)/rho2 - I/rho2, which
increases strictly on (0, sigma) and tends to -inf at 0, so the final
Ignorant fraction is the unique root of phi(I) = k in (0, sigma).
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import DomainError, InvalidParamsError, NoRootError, UnstableStartError
from ..models import Params, State2
from ..utils.invariants import equilibrium_hamiltonian, hamiltonian_bp, hamiltonian_piqueira
from ..utils.root_finding import bisect

logger = logging.getLogger(__name__)

# Bracket expansion never probes below this Ignorant fraction.
BRACKET_FLOOR = 1e-300
UPPER_SHRINK = 1e-9

# Equilibria of the Belen-Pearce system with I below this value attract.
BP_THRESHOLD = 0.5


@dataclass(frozen=True)
class LevelSet:
    """The level line through an interior initial state."""

    k: float
    params: Params

    @classmethod
    def through(cls, p: Params, y0: State2) -> 'LevelSet':
        if y0.i <= 0:
            raise DomainError(f"level set needs I0 > 0, got {y0.i!r}")
        return cls(hamiltonian_piqueira(p, y0), p)


@dataclass(frozen=True)
class FinalState:
    """Predicted end point of a rumor cascade."""

    i_inf: float
    r_inf: float
    bracket: Tuple[float, float]
    iterations: int
    k: float
    residual: float

    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'i_inf': self.i_inf,
            'r_inf': self.r_inf,
            'bracket': list(self.bracket),
            'iterations': self.iterations,
            'residual': self.residual,
        }


@dataclass(frozen=True)
class LevelCurve:
    """Explicit points R(I) of one level line; `inside` flags membership in Omega."""

    r: np.ndarray
    i: np.ndarray
    inside: np.ndarray


def final_ignorants(p: Params, y0: State2, tol: float = 1e-12) -> FinalState:
    """Predict the asymptotic Ignorant fraction without integrating.

    Args:
        p: Model rates
        y0: Initial (R, I) in Omega with I > 0
        tol: Bound on |phi(i_inf) - k|

    Returns:
        FinalState with i_inf in (0, sigma), or I0 itself for a start on the
        stable part of the equilibrium segment

    Raises:
        UnstableStartError: If y0 is an equilibrium above sigma
        NoRootError: If no sign change is found down to BRACKET_FLOOR
    """
    if not tol > 0:
        raise InvalidParamsError(f"tol must be positive, got {tol!r}")
    sigma = p.sigma
    level = LevelSet.through(p, y0)
    k = level.k

    if y0.on_equilibrium_segment:
        if y0.i <= sigma:
            return FinalState(y0.i, 1.0 - y0.i, (y0.i, y0.i), 0, k, 0.0)
        raise UnstableStartError(
            f"start (R={y0.r}, I={y0.i}) is an equilibrium above sigma={sigma:.6g}; its limit is ill-posed"
        )

    def residual(i: float) -> float:
        return equilibrium_hamiltonian(p, i) - k

    hi = sigma * (1.0 - UPPER_SHRINK)
    if residual(hi) < 0:
        raise NoRootError(f"phi(sigma) is below the level k={k!r}; the start is not interior")
    lo = min(y0.i, 0.5 * sigma)
    while residual(lo) >= 0:
        hi = lo
        lo /= 10.0
        if lo < BRACKET_FLOOR:
            raise NoRootError(f"no sign change of phi(I) - k above I={BRACKET_FLOOR}")
    logger.debug("final-size bracket [%r, %r] for k=%r", lo, hi, k)

    result = bisect(residual, lo, hi, tol)
    if not result.converged:
        raise NoRootError(f"bisection did not reach residual {tol} (got {result.residual!r})")
    i_inf = result.root
    return FinalState(i_inf, 1.0 - i_inf, (lo, hi), result.iterations, k, result.residual)


def final_ignorants_bp(i0: float, s0: float, tol: float = 1e-12) -> float:
    """Ignorant fraction left when the Belen-Pearce spreaders die out.

    The conserved value c = S0 + 2*I0 - log(I0) fixes the end point as the
    root of 2I - log(I) = c in (0, 1/2], where 2I - log(I) strictly decreases.

    Raises:
        DomainError: On an invalid start
        UnstableStartError: If S0 = 0 and I0 > 1/2 (equilibrium on the repulsive side)
        NoRootError: If the equation has no root in (0, 1/2]
    """
    if not (math.isfinite(i0) and math.isfinite(s0)) or i0 <= 0 or s0 < 0 or i0 + s0 > 1.0 + 1e-12:
        raise DomainError(f"invalid Belen-Pearce start I0={i0!r}, S0={s0!r}")
    if s0 == 0 and i0 > BP_THRESHOLD:
        raise UnstableStartError(f"start I0={i0} with S0=0 is an equilibrium above I=1/2")
    c = hamiltonian_bp('corrected', i0, s0)

    def residual(i: float) -> float:
        return 2.0 * i - math.log(i) - c

    hi = BP_THRESHOLD
    if residual(hi) > tol:
        raise NoRootError(f"2I - log(I) = {c!r} has no root in (0, 1/2]")
    if residual(hi) >= -tol:
        return hi
    lo = min(i0, 0.25)
    while residual(lo) <= 0:
        hi = lo
        lo /= 10.0
        if lo < BRACKET_FLOOR:
            raise NoRootError(f"no sign change of 2I - log(I) - c above I={BRACKET_FLOOR}")
    result = bisect(residual, lo, hi, tol)
    if not result.converged:
        raise NoRootError(f"bisection did not reach residual {tol} (got {result.residual!r})")
    return result.root


def level_curve(p: Params, k: float, i_grid: Sequence[float]) -> LevelCurve:
    """Invert H(R, I) = k for R on a grid of Ignorant fractions.

    Points with R < 0 or R > 1 - I are returned with inside=False.

    Raises:
        DomainError: If a grid value is <= 0
    """
    i = np.asarray(i_grid, dtype=float)
    if i.size and (np.any(~np.isfinite(i)) or np.any(i <= 0)):
        raise DomainError("level curve grid values must lie in (0, 1]")
    r = p.rho1 * (k - np.log(i) / p.rho2 + i / p.rho2)
    inside = (r >= 0.0) & (r <= 1.0 - i)
    return LevelCurve(r, i, inside)
