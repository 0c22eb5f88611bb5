"""Entry point: parse arguments, build the scenario, run one command."""

import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from config import Scenario
from ..exceptions import RumorModelError
from .commands import (
    cmd_equilibria,
    cmd_final_size,
    cmd_phase_portrait,
    cmd_simulate,
    cmd_verify_integral,
)
from .parser import build_parser, overrides_from
from .sweep import cmd_sweep

logger = logging.getLogger(__name__)

COMMAND_TABLE = {
    'simulate': cmd_simulate,
    'equilibria': cmd_equilibria,
    'final-size': cmd_final_size,
    'verify-integral': cmd_verify_integral,
    'phase-portrait': cmd_phase_portrait,
}


def load_scenario(source: Optional[str], overrides: dict) -> Scenario:
    """Canned name or file, defaulting to the three-population run, with flag overrides."""
    scenario = Scenario.load(source) if source else Scenario.create_default()
    return scenario.with_overrides(**overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )
    logging.captureWarnings(True)
    try:
        scenario = load_scenario(args.scenario, overrides_from(args))
        out_dir = Path(args.out)
        if args.command == 'sweep':
            return cmd_sweep(scenario, out_dir, args.workers)
        return COMMAND_TABLE[args.command](scenario, out_dir)
    except RumorModelError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        logging.captureWarnings(False)
