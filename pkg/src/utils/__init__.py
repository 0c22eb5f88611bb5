"""Numerical helpers: first integrals, differences, root finding, sampling and export."""

from .export import write_csv, write_json
from .finite_difference import FD_STEP, central_difference_gradient, central_difference_jacobian
from .invariants import (
    ConservationReport,
    DriftReport,
    FirstIntegral,
    IntegralId,
    Verdict,
    drift_along,
    equilibrium_hamiltonian,
    hamiltonian_bp,
    hamiltonian_piqueira,
    verify_first_integral,
)
from .repair import SimplexRepair
from .root_finding import RootResult, bisect
from .sampling import TriangleSampler

__all__ = [
    'write_csv',
    'write_json',
    'FD_STEP',
    'central_difference_gradient',
    'central_difference_jacobian',
    'ConservationReport',
    'DriftReport',
    'FirstIntegral',
    'IntegralId',
    'Verdict',
    'drift_along',
    'equilibrium_hamiltonian',
    'hamiltonian_bp',
    'hamiltonian_piqueira',
    'verify_first_integral',
    'SimplexRepair',
    'RootResult',
    'bisect',
    'TriangleSampler',
]
