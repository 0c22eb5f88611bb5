"""Quasi-random sampling of the planar domain."""

import numpy as np
from scipy.stats import qmc

# Lower bound on every sampled coordinate; keeps log(I) well-conditioned.
I_FLOOR = 1e-3


class TriangleSampler:
    """Draws scrambled Halton points in the interior of {a, b >= 0, a + b <= 1}.

    Points are folded from the unit square into the triangle and shrunk so
    both coordinates are at least `floor` and a + b <= 1 - floor.
    """

    def __init__(self, seed: int = 0, floor: float = I_FLOOR):
        """Initialize sampler.

        Args:
            seed: Scrambling seed; the same seed always yields the same points
            floor: Minimum distance of every point from the triangle's edges
        """
        self.seed = seed
        self.floor = floor

    def sample(self, count: int) -> np.ndarray:
        """Create `count` points.

        Args:
            count: Number of points

        Returns:
            Array of shape (count, 2)
        """
        engine = qmc.Halton(d=2, scramble=True, seed=self.seed)
        unit = engine.random(count)
        folded = np.where(unit.sum(axis=1, keepdims=True) > 1.0, 1.0 - unit, unit)
        return self.floor + (1.0 - 3.0 * self.floor) * folded
