"""Ignorant-Spreader-Stifler vector fields.

The Piqueira fields carry the contact rate mu as a uniform time-scale
factor: every term is computed at mu = 1 and the result multiplied by mu,
so that f(p) == mu * f(p with mu=1) holds exactly in floating point.
The Belen-Pearce fields run at unit rates and take no Params.
"""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from ..exceptions import InvalidParamsError
from .jacobians import jacobian2, jacobian3, jacobian_bp2, jacobian_bp3
from .params import ModelId, Params
from .state import components


def piqueira_field(p: Params, x) -> np.ndarray:
    """Derivative (dI/dt, dS/dt, dR/dt) of the full Piqueira system.

    Args:
        p: Model rates
        x: State3 or array (I, S, R)

    Returns:
        Array of the three derivatives; its components cancel to zero
    """
    i, s, r = components(x, 3)
    infection = p.rho2 * i * s
    silencing = p.rho1 * s * (s + r)
    return p.mu * np.array([-infection, infection - silencing, silencing])


def planar_field(p: Params, y) -> np.ndarray:
    """Derivative (dR/dt, dI/dt) of the reduced Piqueira system, scaled by mu."""
    r, i = components(y, 2)
    spreaders = 1.0 - i - r
    return p.mu * np.array([p.rho1 * spreaders * (1.0 - i), -p.rho2 * i * spreaders])


def belen_pearce_field(x) -> np.ndarray:
    """Derivative (dI/dt, dS/dt, dR/dt) of the Belen-Pearce system."""
    i, s, r = components(x, 3)
    return np.array([-i * s, -s * (1.0 - 2.0 * i), s * (1.0 - i)])


def belen_pearce_planar(y) -> np.ndarray:
    """Derivative (dI/dt, dS/dt) of the Belen-Pearce system with R dropped."""
    i, s = components(y, 2)
    return np.array([-i * s, -s * (1.0 - 2.0 * i)])


class VectorField(ABC):
    """A model's vector field in its own coordinates.

    Subclasses expose the coordinate maps to and from the (I, S, R) triple
    so integrators can record every model on the simplex.
    """

    dimension: int = 3
    model: ModelId

    def __init__(self, params: Optional[Params] = None):
        self.params = params

    @abstractmethod
    def evaluate(self, x) -> np.ndarray:
        """Derivative at x (model coordinates)."""

    @abstractmethod
    def jacobian(self, x) -> np.ndarray:
        """Analytic Jacobian at x (model coordinates)."""

    def to_coordinates(self, triple: np.ndarray) -> np.ndarray:
        """Map an (I, S, R) triple to model coordinates."""
        return np.asarray(triple, dtype=float)

    def to_triple(self, x: np.ndarray) -> np.ndarray:
        """Map model coordinates to an (I, S, R) triple."""
        return np.asarray(x, dtype=float)

    def __call__(self, x) -> np.ndarray:
        return self.evaluate(x)


class PiqueiraField(VectorField):
    model = ModelId.PIQUEIRA3

    def evaluate(self, x) -> np.ndarray:
        return piqueira_field(self.params, x)

    def jacobian(self, x) -> np.ndarray:
        return jacobian3(self.params, x)


class PiqueiraPlanarField(VectorField):
    """Coordinates (R, I)."""

    dimension = 2
    model = ModelId.PIQUEIRA_PLANAR

    def evaluate(self, y) -> np.ndarray:
        return planar_field(self.params, y)

    def jacobian(self, y) -> np.ndarray:
        return jacobian2(self.params, y)

    def to_coordinates(self, triple: np.ndarray) -> np.ndarray:
        return np.array([triple[2], triple[0]])

    def to_triple(self, y: np.ndarray) -> np.ndarray:
        r, i = y
        return np.array([i, 1.0 - i - r, r])


class BelenPearceField(VectorField):
    model = ModelId.BELEN_PEARCE3

    def evaluate(self, x) -> np.ndarray:
        return belen_pearce_field(x)

    def jacobian(self, x) -> np.ndarray:
        return jacobian_bp3(x)


class BelenPearcePlanarField(VectorField):
    """Coordinates (I, S)."""

    dimension = 2
    model = ModelId.BELEN_PEARCE_PLANAR

    def evaluate(self, y) -> np.ndarray:
        return belen_pearce_planar(y)

    def jacobian(self, y) -> np.ndarray:
        return jacobian_bp2(y)

    def to_coordinates(self, triple: np.ndarray) -> np.ndarray:
        return np.array([triple[0], triple[1]])

    def to_triple(self, y: np.ndarray) -> np.ndarray:
        i, s = y
        return np.array([i, s, 1.0 - i - s])


_REGISTRY = {
    ModelId.PIQUEIRA3: PiqueiraField,
    ModelId.PIQUEIRA_PLANAR: PiqueiraPlanarField,
    ModelId.BELEN_PEARCE3: BelenPearceField,
    ModelId.BELEN_PEARCE_PLANAR: BelenPearcePlanarField,
}


def field_for(model: ModelId, params: Optional[Params] = None) -> VectorField:
    """Instantiate the vector field of a model.

    Raises:
        InvalidParamsError: If a Piqueira model is requested without Params
    """
    model = ModelId(model)
    if model.uses_params and params is None:
        raise InvalidParamsError(f"model {model.value} requires rho1, rho2 and mu")
    return _REGISTRY[model](params if model.uses_params else None)
