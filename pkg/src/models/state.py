"""Population states on the unit simplex and on the triangle Omega."""

import math
import warnings
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ..exceptions import DomainError, InvalidStateError, RenormalizationWarning

# Violations up to this size are treated as roundoff and clamped.
BOUNDARY_TOL = 1e-12


def _check_finite(**components: float):
    for name, value in components.items():
        if not math.isfinite(value):
            raise InvalidStateError(f"{name}={value!r} is not finite")


def _clamp(name: str, value: float) -> float:
    if value < 0:
        if value < -BOUNDARY_TOL:
            raise DomainError(f"{name}={value!r} is negative")
        return 0.0
    return value


@dataclass(frozen=True)
class State3:
    """Fractions of Ignorants, Spreaders and Stiflers, summing to 1."""

    i: float
    s: float
    r: float

    def __post_init__(self):
        i, s, r = float(self.i), float(self.s), float(self.r)
        _check_finite(i=i, s=s, r=r)
        i, s, r = _clamp('i', i), _clamp('s', s), _clamp('r', r)
        total = i + s + r
        if abs(total - 1.0) > BOUNDARY_TOL:
            raise DomainError(f"I+S+R={total!r} is not 1 (normalized population)")
        object.__setattr__(self, 'i', i)
        object.__setattr__(self, 's', s)
        object.__setattr__(self, 'r', r)

    @classmethod
    def normalized(cls, i: float, s: float, r: float) -> 'State3':
        """Build a state from data that may not sum to 1.

        Non-negative data off the simplex is rescaled by its sum and a
        RenormalizationWarning is emitted.
        """
        _check_finite(i=i, s=s, r=r)
        if min(i, s, r) < -BOUNDARY_TOL:
            raise DomainError(f"negative population fraction in ({i}, {s}, {r})")
        total = i + s + r
        if total <= 0:
            raise DomainError("population fractions sum to zero")
        if abs(total - 1.0) > BOUNDARY_TOL:
            warnings.warn(
                f"initial data I={i}, S={s}, R={r} sums to {total:.12g}; rescaled onto I+S+R=1",
                RenormalizationWarning,
                stacklevel=2,
            )
            i, s, r = i / total, s / total, r / total
        return cls(i, s, r)

    @classmethod
    def from_array(cls, x) -> 'State3':
        i, s, r = (float(v) for v in x)
        return cls(i, s, r)

    def as_array(self) -> np.ndarray:
        return np.array([self.i, self.s, self.r])

    @property
    def on_equilibrium_segment(self) -> bool:
        return self.s <= BOUNDARY_TOL

    def to_dict(self) -> Dict[str, float]:
        return {'I': self.i, 'S': self.s, 'R': self.r}


@dataclass(frozen=True)
class State2:
    """Reduced planar state (R, I) in Omega = {R, I >= 0, R + I <= 1}."""

    r: float
    i: float

    def __post_init__(self):
        r, i = float(self.r), float(self.i)
        _check_finite(r=r, i=i)
        r, i = _clamp('r', r), _clamp('i', i)
        if r + i > 1.0 + BOUNDARY_TOL:
            raise DomainError(f"R+I={r + i!r} exceeds 1 (outside Omega)")
        object.__setattr__(self, 'r', r)
        object.__setattr__(self, 'i', i)

    @classmethod
    def from_array(cls, y) -> 'State2':
        r, i = (float(v) for v in y)
        return cls(r, i)

    def as_array(self) -> np.ndarray:
        return np.array([self.r, self.i])

    @property
    def on_equilibrium_segment(self) -> bool:
        return abs(self.r + self.i - 1.0) <= BOUNDARY_TOL

    def to_dict(self) -> Dict[str, float]:
        return {'R': self.r, 'I': self.i}


def components(x, n: int) -> Tuple[float, ...]:
    """Unpack a state object or array-like into n finite floats.

    Raises:
        InvalidStateError: On a wrong length or a non-finite entry
    """
    if isinstance(x, (State3, State2)):
        values = tuple(float(v) for v in x.as_array())
    else:
        values = tuple(float(v) for v in np.asarray(x, dtype=float).ravel())
    if len(values) != n:
        raise InvalidStateError(f"expected {n} state components, got {len(values)}")
    for value in values:
        if not math.isfinite(value):
            raise InvalidStateError(f"state {values} contains a non-finite component")
    return values


def lift(y: State2) -> State3:
    """Recover the full state by setting S = 1 - I - R."""
    if y.r + y.i > 1.0 + BOUNDARY_TOL:
        raise DomainError(f"R+I={y.r + y.i!r} exceeds 1 (outside Omega)")
    s = max(0.0, 1.0 - y.i - y.r)
    return State3(y.i, s, y.r)


def reduce(x: State3) -> State2:
    """Drop the Spreader fraction."""
    return State2(x.r, x.i)
