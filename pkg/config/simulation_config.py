"""Integration settings."""

import math
from dataclasses import asdict, dataclass
from typing import Dict

from src.exceptions import InvalidParamsError


@dataclass(frozen=True)
class SimOptions:
    """Fixed-step integration parameters.

    Follows SRP: Only responsible for holding configuration.
    """

    # Time stepping
    step: float = 1e-3
    t_end: float = 200.0

    # Early stop once S drops below this fraction; 0 disables it
    stop_s_below: float = 1e-10

    # Record every n-th step (the final state is always recorded)
    record_every: int = 10

    def __post_init__(self):
        """Validate option ranges."""
        if not (math.isfinite(self.step) and self.step > 0):
            raise InvalidParamsError(f"step must be positive, got {self.step!r}")
        if not (math.isfinite(self.t_end) and self.t_end >= self.step):
            raise InvalidParamsError(f"t_end must be >= step, got {self.t_end!r}")
        if not (math.isfinite(self.stop_s_below) and self.stop_s_below >= 0):
            raise InvalidParamsError(f"stop_s_below must be >= 0, got {self.stop_s_below!r}")
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise InvalidParamsError(f"record_every must be a positive integer, got {self.record_every!r}")

    @property
    def n_steps(self) -> int:
        return max(1, int(round(self.t_end / self.step)))

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    @classmethod
    def create_default(cls) -> 'SimOptions':
        """Create options with default values."""
        return cls()

    @classmethod
    def create_fast(cls) -> 'SimOptions':
        """Create options optimized for speed."""
        return cls(step=1e-2, t_end=400.0, record_every=10)

    @classmethod
    def create_thorough(cls) -> 'SimOptions':
        """Create options recording every step of a fine run."""
        return cls(step=1e-4, t_end=200.0, record_every=1)
