"""Boundary repair for integrated states."""

import numpy as np

# Components below -LEFT_DOMAIN_TOL mean the scheme itself failed.
LEFT_DOMAIN_TOL = 1e-9


class SimplexRepair:
    """Pulls integrated (I, S, R) triples back onto the unit simplex.

    Follows SRP: Only responsible for constraint enforcement. Negative
    components down to -fail_tol are roundoff and are clamped to zero;
    the triple is then rescaled by its sum.
    """

    def __init__(self, fail_tol: float = LEFT_DOMAIN_TOL):
        """Initialize with a tolerance.

        Args:
            fail_tol: Violations beyond which the state left the domain
        """
        self.fail_tol = fail_tol

    def left_domain(self, triple: np.ndarray) -> bool:
        """Check whether any component went below -fail_tol."""
        return bool(np.min(triple) < -self.fail_tol)

    def repair(self, triple: np.ndarray) -> np.ndarray:
        """Clamp negative components and renormalize the sum to 1.

        Callers check left_domain first; every remaining negative value is
        within the roundoff band.

        Args:
            triple: (I, S, R) array, not modified

        Returns:
            Repaired copy
        """
        repaired = np.maximum(triple, 0.0)
        return repaired / repaired.sum()
