"""First integrals of the rumor systems and their numerical verification.

The Piqueira planar system conserves

    H(R, I) = R / rho1 + log(I) / rho2 - I / rho2,

for every mu, since mu only rescales time. For the Belen-Pearce planar
system the published integral log(I) - 2I + S is not conserved (its time
derivative is -2S + 4IS); the conserved function is S + 2I - log(I).
Both variants are selectable.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from ..exceptions import EvaluationError, InvalidParamsError, SingularityError
from ..models import ModelId, Params, Trajectory, components
from .finite_difference import FD_STEP, central_difference_gradient
from .sampling import I_FLOOR, TriangleSampler

logger = logging.getLogger(__name__)


class IntegralId(str, Enum):
    PIQUEIRA_H = 'PiqueiraH'
    BELEN_PEARCE_PAPER_H = 'BelenPearcePaperH'
    BELEN_PEARCE_CORRECTED_H = 'BelenPearceCorrectedH'


class Verdict(str, Enum):
    CONSERVED = 'Conserved'
    NOT_CONSERVED = 'NotConserved'


BP_VARIANTS = ('paper', 'corrected')


def hamiltonian_piqueira(p: Params, y) -> float:
    """Evaluate H(R, I) at a State2 or (R, I) array.

    Raises:
        SingularityError: If I <= 0
    """
    r, i = components(y, 2)
    if i <= 0:
        raise SingularityError(f"H(R, I) needs I > 0, got I={i!r}")
    return r / p.rho1 + math.log(i) / p.rho2 - i / p.rho2


def equilibrium_hamiltonian(p: Params, i: float) -> float:
    """H restricted to the equilibrium segment R = 1 - I.

    Strictly increasing on (0, sigma), strictly decreasing on (sigma, 1).
    """
    if i <= 0:
        raise SingularityError(f"phi(I) needs I > 0, got I={i!r}")
    return (1.0 - i) / p.rho1 + math.log(i) / p.rho2 - i / p.rho2


def hamiltonian_bp(variant: str, i: float, s: float) -> float:
    """Belen-Pearce integral candidates.

    Args:
        variant: 'paper' for log(I) - 2I + S, 'corrected' for S + 2I - log(I)
        i: Ignorant fraction
        s: Spreader fraction

    Raises:
        SingularityError: If i <= 0
        InvalidParamsError: On an unknown variant
    """
    if variant not in BP_VARIANTS:
        raise InvalidParamsError(f"unknown Belen-Pearce integral variant '{variant}'")
    if i <= 0:
        raise SingularityError(f"Belen-Pearce integral needs I > 0, got I={i!r}")
    if variant == 'paper':
        return math.log(i) - 2.0 * i + s
    return s + 2.0 * i - math.log(i)


@dataclass(frozen=True)
class FirstIntegral:
    """A first integral together with the model coordinates it reads.

    PiqueiraH takes params; the Belen-Pearce variants take none.
    """

    id: IntegralId
    params: Optional[Params] = None

    def __post_init__(self):
        object.__setattr__(self, 'id', IntegralId(self.id))
        if self.id is IntegralId.PIQUEIRA_H and self.params is None:
            raise InvalidParamsError("PiqueiraH requires params")
        if self.id is not IntegralId.PIQUEIRA_H and self.params is not None:
            raise InvalidParamsError(f"{self.id.value} takes no params")

    def __call__(self, y) -> float:
        """Evaluate at planar coordinates: (R, I) for PiqueiraH, (I, S) otherwise."""
        if self.id is IntegralId.PIQUEIRA_H:
            return hamiltonian_piqueira(self.params, y)
        i, s = components(y, 2)
        variant = 'paper' if self.id is IntegralId.BELEN_PEARCE_PAPER_H else 'corrected'
        return hamiltonian_bp(variant, i, s)

    def on_triple(self, triple) -> float:
        """Evaluate at an (I, S, R) triple."""
        i, s, r = components(triple, 3)
        if self.id is IntegralId.PIQUEIRA_H:
            return hamiltonian_piqueira(self.params, (r, i))
        return self((i, s))

    @classmethod
    def for_model(cls, model: ModelId, params: Optional[Params] = None) -> Optional['FirstIntegral']:
        """Integral registered for a model (the corrected one for Belen-Pearce)."""
        model = ModelId(model)
        if model.uses_params:
            return cls(IntegralId.PIQUEIRA_H, params) if params is not None else None
        return cls(IntegralId.BELEN_PEARCE_CORRECTED_H)


@dataclass(frozen=True)
class ConservationReport:
    """Residual statistics of grad(H) . field over sample points."""

    max_abs_residual: float
    mean_abs_residual: float
    sample_count: int
    verdict: Verdict
    tolerance: float

    def to_dict(self) -> dict:
        return {
            'max_abs_residual': self.max_abs_residual,
            'mean_abs_residual': self.mean_abs_residual,
            'sample_count': self.sample_count,
            'verdict': self.verdict.value,
            'tolerance': self.tolerance,
        }


@dataclass(frozen=True)
class DriftReport:
    """Deviation of a first integral from its initial value along a trajectory.

    Attributes:
        max_drift: Largest |H(t) - H(0)| over evaluated records
        final_drift: |H - H(0)| at the last evaluated record
        truncated: True if a record with I = 0 stopped the evaluation
        evaluated: Number of records evaluated
    """

    max_drift: float
    final_drift: float
    truncated: bool
    evaluated: int


def verify_first_integral(
    field: Callable[[np.ndarray], np.ndarray],
    candidate: Callable[[np.ndarray], float],
    samples: int = 1000,
    tol: float = 1e-6,
    seed: int = 0,
    eps: float = FD_STEP
) -> ConservationReport:
    """Check numerically that a candidate is constant along a planar field.

    The directional derivative grad(candidate) . field is computed with
    central differences at quasi-random interior points of the planar
    triangle, every coordinate bounded below by I_FLOOR.

    Args:
        field: Planar vector field
        candidate: Real-valued function of the planar state
        samples: Number of sample points (>= 1)
        tol: Verdict threshold on the maximum absolute residual
        seed: Sampler seed
        eps: Finite-difference step

    Raises:
        EvaluationError: If the candidate is non-finite at a sample point
    """
    if samples < 1:
        raise InvalidParamsError(f"samples must be >= 1, got {samples}")
    if not tol > 0:
        raise InvalidParamsError(f"tol must be positive, got {tol}")

    points = TriangleSampler(seed=seed, floor=I_FLOOR).sample(samples)
    residuals = np.empty(samples)
    for k, point in enumerate(points):
        value = candidate(point)
        if not math.isfinite(value):
            raise EvaluationError(f"candidate is {value!r} at {point.tolist()}", point=point.tolist())
        grad = central_difference_gradient(candidate, point, eps)
        residuals[k] = abs(float(np.dot(grad, field(point))))
        if not math.isfinite(residuals[k]):
            raise EvaluationError(f"non-finite residual at {point.tolist()}", point=point.tolist())

    max_residual = float(residuals.max())
    verdict = Verdict.CONSERVED if max_residual <= tol else Verdict.NOT_CONSERVED
    logger.info("first-integral check: max residual %.3e over %d points -> %s",
                max_residual, samples, verdict.value)
    return ConservationReport(max_residual, float(residuals.mean()), samples, verdict, tol)


def drift_along(trajectory: Trajectory, integral: FirstIntegral) -> DriftReport:
    """Max and final |H - H(0)| over the recorded states of a trajectory.

    Raises:
        SingularityError: If the very first record has I = 0
    """
    reference = integral.on_triple(trajectory.states[0])
    max_drift = final_drift = 0.0
    evaluated = 1
    truncated = False
    for triple in trajectory.states[1:]:
        if triple[0] <= 0:
            truncated = True
            logger.warning("drift evaluation stopped at a record with I=0 after %d records", evaluated)
            break
        final_drift = abs(integral.on_triple(triple) - reference)
        max_drift = max(max_drift, final_drift)
        evaluated += 1
    return DriftReport(max_drift, final_drift, truncated, evaluated)
