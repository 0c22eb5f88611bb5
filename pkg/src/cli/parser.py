"""Argument parsing for the rumor-dynamics command line."""

import argparse
from typing import Dict, List, Tuple

from ..models import ModelId
from ..utils.invariants import BP_VARIANTS

COMMANDS = ('simulate', 'equilibria', 'final-size', 'verify-integral', 'phase-portrait', 'sweep')


def _float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def _starts(text: str) -> List[Tuple[float, float]]:
    starts = []
    for item in text.split(','):
        if not item.strip():
            continue
        try:
            r, i = item.split(':')
            starts.append((float(r), float(i)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected 'R:I' pairs separated by commas, got '{item}'")
    return starts


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--scenario', help="scenario JSON file or canned name (fig1 ... fig5)")
    common.add_argument('--out', default='out', help="output directory (default: %(default)s)")
    common.add_argument('--seed', type=int, help="seed of the quasi-random sampler")
    common.add_argument('--workers', type=_positive_int, default=1, help="sweep worker processes")
    common.add_argument('--verbose', '-v', action='store_true', help="log at DEBUG level")

    group = common.add_argument_group('scenario overrides')
    group.add_argument('--model', choices=[m.value for m in ModelId])
    group.add_argument('--rho1', type=float)
    group.add_argument('--rho2', type=float)
    group.add_argument('--mu', type=float)
    group.add_argument('--i0', type=float)
    group.add_argument('--s0', type=float)
    group.add_argument('--r0', type=float)
    group.add_argument('--step', type=float)
    group.add_argument('--t-end', dest='t_end', type=float)
    group.add_argument('--n', type=int, help="points of the equilibrium scan")
    group.add_argument('--samples', type=int, help="sample points of the integral check")
    group.add_argument('--tol', type=float, help="conservation verdict threshold")
    group.add_argument('--variant', choices=BP_VARIANTS, help="Belen-Pearce integral variant")
    group.add_argument('--starts', type=_starts, help="phase-portrait starts 'R:I,R:I,...'")
    group.add_argument('--levels', type=_float_list, help="level values 'k1,k2,...'")
    group.add_argument('--rho1-values', dest='rho1_values', type=_float_list)
    group.add_argument('--rho2-values', dest='rho2_values', type=_float_list)
    group.add_argument('--mu-values', dest='mu_values', type=_float_list)
    return common


OVERRIDE_KEYS = (
    'model', 'rho1', 'rho2', 'mu', 'i0', 's0', 'r0', 'step', 't_end', 'n', 'samples', 'tol',
    'variant', 'seed', 'starts', 'levels', 'rho1_values', 'rho2_values', 'mu_values',
)


def build_parser() -> argparse.ArgumentParser:
    """Create the top-level parser with one subcommand per analysis."""
    parser = argparse.ArgumentParser(
        prog='rumor-dynamics',
        description="Ignorant-Spreader-Stifler rumor model: simulation, stability and final size.",
    )
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')
    common = _common_options()
    helps = {
        'simulate': "integrate a scenario and write trajectory.csv and summary.json",
        'equilibria': "classify the equilibrium segment and write equilibria.csv/json",
        'final-size': "predict the asymptotic Ignorant fraction",
        'verify-integral': "check a first-integral candidate numerically",
        'phase-portrait': "write trajectories and level curves of the planar system",
        'sweep': "compare prediction and integration over a rate grid",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=helps[command])
    return parser


def overrides_from(args: argparse.Namespace) -> Dict[str, object]:
    """Collect the scenario keys set on the command line."""
    return {key: getattr(args, key) for key in OVERRIDE_KEYS if getattr(args, key, None) is not None}
