"""Bisection on a verified sign-change bracket."""

import logging
from dataclasses import dataclass
from typing import Callable

from ..exceptions import NoRootError

logger = logging.getLogger(__name__)


@dataclass
class RootResult:
    """Result of root finding.

    Attributes:
        root: Final midpoint
        residual: |f(root)|
        lo: Final lower bracket end
        hi: Final upper bracket end
        iterations: Number of halvings performed
        converged: Whether |f(root)| <= tol was reached
    """

    root: float
    residual: float
    lo: float
    hi: float
    iterations: int
    converged: bool


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iterations: int = 200
) -> RootResult:
    """Find a root of f in [lo, hi] by bisection.

    The tolerance bounds the residual |f(root)|, not the bracket width. If
    the bracket collapses to adjacent floats before the residual drops
    below tol, the midpoint is returned unconverged.

    Raises:
        NoRootError: If f(lo) and f(hi) have the same strict sign
    """
    f_lo, f_hi = f(lo), f(hi)
    if f_lo * f_hi > 0:
        raise NoRootError(f"no sign change on [{lo!r}, {hi!r}]: f={f_lo!r}, {f_hi!r}")

    for end, f_end in ((lo, f_lo), (hi, f_hi)):
        if abs(f_end) <= tol:
            return RootResult(end, abs(f_end), lo, hi, 0, True)

    mid, f_mid = lo, f_lo
    for iteration in range(1, max_iterations + 1):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if abs(f_mid) <= tol:
            return RootResult(mid, abs(f_mid), lo, hi, iteration, True)
        if mid in (lo, hi):
            logger.debug("bracket collapsed at %r with residual %r", mid, f_mid)
            return RootResult(mid, abs(f_mid), lo, hi, iteration, False)
        if f_lo * f_mid < 0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid

    logger.warning("bisection stopped after %d iterations, residual %r", max_iterations, f_mid)
    return RootResult(mid, abs(f_mid), lo, hi, max_iterations, False)
