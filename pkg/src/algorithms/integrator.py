"""Fixed-step classical Runge-Kutta integration of the rumor systems."""

import logging
from typing import Callable, List, Optional

import numpy as np

from config.simulation_config import SimOptions
from ..exceptions import IntegrationBlowupError, SingularityError
from ..models import (
    ModelId,
    Params,
    State2,
    State3,
    StopReason,
    Trajectory,
    VectorField,
    field_for,
    lift,
)
from ..utils.invariants import FirstIntegral
from ..utils.repair import SimplexRepair

logger = logging.getLogger(__name__)


def _check_stage(k: np.ndarray, stage: int) -> np.ndarray:
    if not np.all(np.isfinite(k)):
        raise IntegrationBlowupError(f"non-finite Runge-Kutta stage k{stage}: {k.tolist()}")
    return k


def rk4_step(field: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float) -> np.ndarray:
    """One classical fourth-order Runge-Kutta step of an autonomous field.

    Args:
        field: State derivative function
        x: Current state vector
        h: Step size (> 0)

    Returns:
        New state vector

    Raises:
        IntegrationBlowupError: If any stage is non-finite
    """
    x = np.asarray(x, dtype=float)
    k1 = _check_stage(np.asarray(field(x), dtype=float), 1)
    k2 = _check_stage(np.asarray(field(x + 0.5 * h * k1), dtype=float), 2)
    k3 = _check_stage(np.asarray(field(x + 0.5 * h * k2), dtype=float), 3)
    k4 = _check_stage(np.asarray(field(x + h * k3), dtype=float), 4)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


class Simulator:
    """Integrates one model and records its trajectory on the simplex.

    Follows SRP: Only responsible for coordinating the stepping loop;
    the field, boundary repair and first integral are injected.
    """

    def __init__(
        self,
        field: VectorField,
        options: SimOptions,
        integral: Optional[FirstIntegral] = None,
        repair: Optional[SimplexRepair] = None
    ):
        """Initialize simulator.

        Args:
            field: Vector field in model coordinates
            options: Integration settings
            integral: First integral recorded alongside each state, if any
            repair: Boundary repair mechanism
        """
        self.field = field
        self.options = options
        self.integral = integral
        self.repair = repair or SimplexRepair()

    def run(self, x0: State3) -> Trajectory:
        """Integrate from x0 until the horizon, spreader extinction or domain exit.

        Args:
            x0: Initial state on the simplex

        Returns:
            Recorded trajectory
        """
        opts = self.options
        triple = x0.as_array()
        x = self.field.to_coordinates(triple)

        times: List[float] = [0.0]
        states: List[np.ndarray] = [triple]
        last_recorded = 0

        if triple[1] < opts.stop_s_below:
            logger.info("spreaders already extinct at t=0")
            return self._finish(times, states, StopReason.SPREADER_EXTINCT)

        stop_reason = StopReason.HORIZON_REACHED
        n_steps = opts.n_steps
        for n in range(1, n_steps + 1):
            x_new = rk4_step(self.field, x, opts.step)
            candidate = self.field.to_triple(x_new)
            if self.repair.left_domain(candidate):
                logger.warning("state %s left the domain at t=%.6g", candidate.tolist(), n * opts.step)
                stop_reason = StopReason.LEFT_DOMAIN
                break

            triple = self.repair.repair(candidate)
            x = self.field.to_coordinates(triple)

            if triple[1] < opts.stop_s_below:
                times.append(n * opts.step)
                states.append(triple)
                last_recorded = n
                stop_reason = StopReason.SPREADER_EXTINCT
                break
            if n % opts.record_every == 0 or n == n_steps:
                times.append(n * opts.step)
                states.append(triple)
                last_recorded = n
            if n % 10000 == 0:
                logger.debug("t=%.3f I=%.6g S=%.6g R=%.6g", n * opts.step, *triple)

        if stop_reason is StopReason.LEFT_DOMAIN and last_recorded != n - 1:
            times.append((n - 1) * opts.step)
            states.append(triple)

        logger.info("%s run stopped: %s at t=%.6g", self.field.model.value, stop_reason.value, times[-1])
        return self._finish(times, states, stop_reason)

    def _finish(self, times: List[float], states: List[np.ndarray], reason: StopReason) -> Trajectory:
        """Bundle records and evaluate the first integral on each."""
        states_array = np.array(states)
        h_values = None
        if self.integral is not None:
            h_values = np.array([self._integral_or_nan(triple) for triple in states_array])
        return Trajectory(np.array(times), states_array, h_values, reason, self.field.model)

    def _integral_or_nan(self, triple: np.ndarray) -> float:
        try:
            return self.integral.on_triple(triple)
        except SingularityError:
            return float('nan')


def simulate(model: ModelId, p: Optional[Params], x0: State3, opts: SimOptions) -> Trajectory:
    """Integrate any model from a full initial state.

    Planar models integrate in their own coordinates and are lifted to
    (I, S, R) for recording.

    Args:
        model: Which vector field
        p: Rates (ignored by the Belen-Pearce models)
        x0: Initial state
        opts: Integration settings
    """
    if not isinstance(x0, State3):
        x0 = State3.from_array(x0)
    field = field_for(model, p)
    integral = FirstIntegral.for_model(model, p)
    return Simulator(field, opts, integral).run(x0)


def simulate_planar(p: Params, y0: State2, opts: SimOptions) -> Trajectory:
    """Integrate the planar Piqueira system from (R, I)."""
    return simulate(ModelId.PIQUEIRA_PLANAR, p, lift(y0), opts)
