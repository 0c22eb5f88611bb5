"""Command implementations.

Every command takes a Scenario and an output directory, writes its
artifacts and returns the process exit code. Errors derived from
RumorModelError propagate to the entry point, which maps them to exit codes.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from config import Scenario
from ..algorithms import (
    BP_THRESHOLD,
    boundary_flow,
    equilibrium_scan,
    final_ignorants,
    final_ignorants_bp,
    level_curve,
    simulate,
    simulate_planar,
)
from ..exceptions import RumorModelError, ScenarioError
from ..models import ModelId, Params, State2, Trajectory, field_for
from ..utils.export import write_csv, write_json
from ..utils.invariants import FirstIntegral, IntegralId, Verdict, verify_first_integral

logger = logging.getLogger(__name__)

TRAJECTORY_HEADER = ('t', 'I', 'S', 'R', 'H', 'drift')
EQUILIBRIA_HEADER = ('I', 'R', 'tau', 'class')
LEVEL_HEADER = ('R', 'I', 'inside')

EXIT_OK = 0
EXIT_NOT_CONSERVED = 5


def _banner(title: str):
    print("=" * 80)
    print(title)
    print("=" * 80)


def _require_params(scenario: Scenario, command: str) -> Params:
    if scenario.params is None:
        raise ScenarioError(f"{command} needs a Piqueira model with rho1 and rho2")
    return scenario.params


def _trajectory_columns(trajectory: Trajectory) -> Dict[str, np.ndarray]:
    n = len(trajectory)
    if trajectory.h_values is None:
        h = drift = np.full(n, np.nan)
    else:
        h = np.asarray(trajectory.h_values, dtype=float)
        drift = np.abs(h - h[0])
    return {
        't': trajectory.times,
        'I': trajectory.i,
        'S': trajectory.s,
        'R': trajectory.r,
        'H': h,
        'drift': drift,
    }


def _max_drift(trajectory: Trajectory) -> Optional[float]:
    if trajectory.h_values is None:
        return None
    drift = np.abs(np.asarray(trajectory.h_values) - trajectory.h_values[0])
    if np.all(np.isnan(drift)):
        return None
    return float(np.nanmax(drift))


def predict_final_ignorants(scenario: Scenario) -> float:
    """Final-size prediction for the scenario's model and initial state."""
    if scenario.model.uses_params:
        return final_ignorants(scenario.params, scenario.planar_init).i_inf
    return final_ignorants_bp(scenario.init.i, scenario.init.s)


def cmd_simulate(scenario: Scenario, out_dir: Path) -> int:
    """Integrate the scenario and write trajectory.csv and summary.json."""
    _banner(f"Simulating scenario '{scenario.name}' ({scenario.model.value})")
    trajectory = simulate(scenario.model, scenario.params, scenario.init, scenario.sim)
    final = trajectory.final_state
    print(f"Stopped: {trajectory.stop_reason.value} at t={trajectory.t_final:.6g}")
    print(f"Final state: I={final.i:.6g} S={final.s:.6g} R={final.r:.6g}")

    summary = {
        'name': scenario.name,
        'model': scenario.model.value,
        'params': scenario.params.to_dict() if scenario.params else None,
        'init': scenario.init.to_dict(),
        'sim': scenario.sim.to_dict(),
        'stop_reason': trajectory.stop_reason.value,
        't_final': trajectory.t_final,
        'final_state': final.to_dict(),
        'records': len(trajectory),
        'max_drift': _max_drift(trajectory),
        'sigma': scenario.params.sigma if scenario.params else BP_THRESHOLD,
        'i_inf': None,
        'rel_gap': None,
        'prediction_error': None,
    }
    try:
        i_inf = predict_final_ignorants(scenario)
    except RumorModelError as exc:
        logger.info("no final-size prediction: %s", exc)
        summary['prediction_error'] = f"{type(exc).__name__}: {exc}"
    else:
        summary['i_inf'] = i_inf
        summary['rel_gap'] = abs(final.i - i_inf) / i_inf if i_inf > 0 else None
        print(f"Predicted final Ignorant fraction: {i_inf:.6g}")

    if 'csv' in scenario.outputs:
        write_csv(out_dir / 'trajectory.csv', _trajectory_columns(trajectory), TRAJECTORY_HEADER)
    if 'json' in scenario.outputs:
        write_json(out_dir / 'summary.json', summary)
    return EXIT_OK


def cmd_equilibria(scenario: Scenario, out_dir: Path) -> int:
    """Scan the equilibrium segment and write equilibria.csv and equilibria.json."""
    params = _require_params(scenario, 'equilibria')
    _banner(f"Equilibrium scan for rho1={params.rho1}, rho2={params.rho2}, mu={params.mu}")
    reports = equilibrium_scan(params, scenario.n)
    print(f"Threshold sigma = {params.sigma:.17g}")

    rows = [report.to_dict() for report in reports]
    if 'csv' in scenario.outputs:
        columns = {key: [row[key] for row in rows] for key in EQUILIBRIA_HEADER}
        write_csv(out_dir / 'equilibria.csv', columns, EQUILIBRIA_HEADER)
    if 'json' in scenario.outputs:
        flow = boundary_flow(params)
        write_json(out_dir / 'equilibria.json', {
            'name': scenario.name,
            'params': params.to_dict(),
            'sigma': params.sigma,
            'n': scenario.n,
            'points': rows,
            'boundary_inward': flow.inward,
        })
    return EXIT_OK


def cmd_final_size(scenario: Scenario, out_dir: Path) -> int:
    """Predict the final Ignorant fraction and write final_size.json."""
    _banner(f"Final-size prediction for scenario '{scenario.name}'")
    if scenario.model.uses_params:
        result = final_ignorants(scenario.params, scenario.planar_init)
        payload = {**result.to_dict(), 'sigma': scenario.params.sigma}
    else:
        i_inf = final_ignorants_bp(scenario.init.i, scenario.init.s)
        payload = {
            'k': FirstIntegral(IntegralId.BELEN_PEARCE_CORRECTED_H)((scenario.init.i, scenario.init.s)),
            'i_inf': i_inf,
            'r_inf': 1.0 - i_inf,
            'sigma': BP_THRESHOLD,
        }
    payload.update(name=scenario.name, model=scenario.model.value)
    print(f"i_inf = {payload['i_inf']:.6g}, r_inf = {payload['r_inf']:.6g}")
    if 'json' in scenario.outputs:
        write_json(out_dir / 'final_size.json', payload)
    return EXIT_OK


def cmd_verify_integral(scenario: Scenario, out_dir: Path) -> int:
    """Check the model's first-integral candidate; exit 5 when it is not conserved."""
    if scenario.model.uses_params:
        if scenario.variant == 'paper':
            raise ScenarioError("variant 'paper' applies to Belen-Pearce models only")
        field = field_for(ModelId.PIQUEIRA_PLANAR, scenario.params)
        candidate = FirstIntegral(IntegralId.PIQUEIRA_H, scenario.params)
    else:
        field = field_for(ModelId.BELEN_PEARCE_PLANAR)
        integral_id = (IntegralId.BELEN_PEARCE_PAPER_H if scenario.variant == 'paper'
                       else IntegralId.BELEN_PEARCE_CORRECTED_H)
        candidate = FirstIntegral(integral_id)
    _banner(f"Verifying {candidate.id.value} on {field.model.value}")

    report = verify_first_integral(field, candidate, scenario.samples, scenario.tol, scenario.seed)
    print(f"Max |dH/dt| = {report.max_abs_residual:.3e} over {report.sample_count} points: "
          f"{report.verdict.value}")
    if 'json' in scenario.outputs:
        write_json(out_dir / 'verify.json', {
            **report.to_dict(),
            'name': scenario.name,
            'model': scenario.model.value,
            'integral': candidate.id.value,
            'seed': scenario.seed,
        })
    return EXIT_OK if report.verdict is Verdict.CONSERVED else EXIT_NOT_CONSERVED


def cmd_phase_portrait(scenario: Scenario, out_dir: Path) -> int:
    """Write one trajectory per start, one level curve per level and portrait.json."""
    params = _require_params(scenario, 'phase-portrait')
    starts = scenario.starts or ((scenario.init.r, scenario.init.i),)
    _banner(f"Phase portrait: {len(starts)} starts, {len(scenario.levels)} level curves")

    trajectories: List[dict] = []
    for index, (r0, i0) in enumerate(starts):
        trajectory = simulate_planar(params, State2(r0, i0), scenario.sim)
        filename = f'trajectory_{index:02d}.csv'
        if 'csv' in scenario.outputs:
            write_csv(out_dir / filename, _trajectory_columns(trajectory), TRAJECTORY_HEADER)
        final = trajectory.final_state
        trajectories.append({
            'file': filename,
            'start': {'R': r0, 'I': i0},
            'final': {'R': final.r, 'I': final.i},
            'stop_reason': trajectory.stop_reason.value,
            'max_drift': _max_drift(trajectory),
        })
        print(f"  start (R={r0}, I={i0}) -> I={final.i:.6g} ({trajectory.stop_reason.value})")

    i_grid = np.linspace(1.0 / scenario.level_points, 1.0, scenario.level_points)
    levels: List[dict] = []
    for index, k in enumerate(scenario.levels):
        curve = level_curve(params, k, i_grid)
        filename = f'level_{index:02d}.csv'
        if 'csv' in scenario.outputs:
            columns = {'R': curve.r, 'I': curve.i, 'inside': curve.inside.astype(int)}
            write_csv(out_dir / filename, columns, LEVEL_HEADER)
        levels.append({'file': filename, 'k': k, 'inside_points': int(curve.inside.sum())})

    if 'json' in scenario.outputs:
        write_json(out_dir / 'portrait.json', {
            'name': scenario.name,
            'params': params.to_dict(),
            'sigma': params.sigma,
            'trajectories': trajectories,
            'levels': levels,
        })
    return EXIT_OK
