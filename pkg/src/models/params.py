"""Model rates and model identifiers."""

import math
import warnings
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict

from ..exceptions import InvalidParamsError, ParameterRangeWarning


class ModelId(str, Enum):
    """Closed enumeration of the supported vector fields."""

    PIQUEIRA3 = 'piqueira3'
    PIQUEIRA_PLANAR = 'piqueira-planar'
    BELEN_PEARCE3 = 'belen-pearce3'
    BELEN_PEARCE_PLANAR = 'belen-pearce-planar'

    @property
    def uses_params(self) -> bool:
        """Belen-Pearce systems run at unit rates and ignore Params."""
        return self in (ModelId.PIQUEIRA3, ModelId.PIQUEIRA_PLANAR)

    @classmethod
    def parse(cls, value: str) -> 'ModelId':
        try:
            return cls(value)
        except ValueError:
            choices = ', '.join(m.value for m in cls)
            raise InvalidParamsError(f"Unknown model '{value}' (expected one of: {choices})")


@dataclass(frozen=True)
class Params:
    """Rates of the Ignorant-Spreader-Stifler system.

    Attributes:
        rho1: Probability that a Spreader meeting a Spreader or Stifler is silenced
        rho2: Probability that an Ignorant hearing the rumor becomes a Spreader
        mu: Average number of contacts per individual per unit time
    """

    rho1: float
    rho2: float
    mu: float = 1.0

    def __post_init__(self):
        """Reject non-positive rates, warn on rates above 1."""
        for name in ('rho1', 'rho2', 'mu'):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
                raise InvalidParamsError(f"{name} must be a finite positive number, got {value!r}")
        for name in ('rho1', 'rho2'):
            if getattr(self, name) > 1:
                warnings.warn(
                    f"{name}={getattr(self, name)} exceeds 1 although it is a per-contact probability",
                    ParameterRangeWarning,
                    stacklevel=3,
                )

    @property
    def sigma(self) -> float:
        """Stability threshold rho1 / (rho1 + rho2); independent of mu."""
        return self.rho1 / (self.rho1 + self.rho2)

    def with_mu(self, mu: float) -> 'Params':
        return replace(self, mu=mu)

    def to_dict(self) -> Dict[str, float]:
        return {'rho1': self.rho1, 'rho2': self.rho2, 'mu': self.mu}

    @classmethod
    def create_default(cls) -> 'Params':
        """Rates of the three-population scenarios (rho1=0.1, rho2=0.9, mu=0.8)."""
        return cls(rho1=0.1, rho2=0.9, mu=0.8)

    @classmethod
    def create_threshold_demo(cls) -> 'Params':
        """Rates of the phase-plane scenarios (rho1=0.4, rho2=0.8, mu=1)."""
        return cls(rho1=0.4, rho2=0.8, mu=1.0)
