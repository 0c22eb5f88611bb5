"""Data models and vector fields of the rumor propagation systems."""

from .params import ModelId, Params
from .state import BOUNDARY_TOL, State2, State3, components, lift, reduce
from .trajectory import StopReason, Trajectory
from .jacobians import jacobian2, jacobian3, jacobian3_printed, jacobian_bp2, jacobian_bp3
from .vector_fields import (
    VectorField,
    PiqueiraField,
    PiqueiraPlanarField,
    BelenPearceField,
    BelenPearcePlanarField,
    belen_pearce_field,
    belen_pearce_planar,
    field_for,
    piqueira_field,
    planar_field,
)

__all__ = [
    'ModelId',
    'Params',
    'BOUNDARY_TOL',
    'State2',
    'State3',
    'components',
    'lift',
    'reduce',
    'StopReason',
    'Trajectory',
    'jacobian2',
    'jacobian3',
    'jacobian3_printed',
    'jacobian_bp2',
    'jacobian_bp3',
    'VectorField',
    'PiqueiraField',
    'PiqueiraPlanarField',
    'BelenPearceField',
    'BelenPearcePlanarField',
    'belen_pearce_field',
    'belen_pearce_planar',
    'field_for',
    'piqueira_field',
    'planar_field',
]
