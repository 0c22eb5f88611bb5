"""Integration, stability analysis and final-size prediction."""

from .integrator import Simulator, rk4_step, simulate, simulate_planar
from .stability import (
    BoundaryFlowReport,
    EquilibriumReport,
    StabilityClass,
    boundary_flow,
    classify_equilibrium,
    eigen_full_at_equilibrium,
    equilibrium_scan,
    jacobian_fd_check,
    probe_equilibrium,
    threshold_sigma,
)
from .final_size import (
    BP_THRESHOLD,
    FinalState,
    LevelCurve,
    LevelSet,
    final_ignorants,
    final_ignorants_bp,
    level_curve,
)

__all__ = [
    'Simulator',
    'rk4_step',
    'simulate',
    'simulate_planar',
    'BoundaryFlowReport',
    'EquilibriumReport',
    'StabilityClass',
    'boundary_flow',
    'classify_equilibrium',
    'eigen_full_at_equilibrium',
    'equilibrium_scan',
    'jacobian_fd_check',
    'probe_equilibrium',
    'threshold_sigma',
    'BP_THRESHOLD',
    'FinalState',
    'LevelCurve',
    'LevelSet',
    'final_ignorants',
    'final_ignorants_bp',
    'level_curve',
]
