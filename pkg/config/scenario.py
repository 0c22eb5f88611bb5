"""Scenario files: one flat JSON object per run."""

import json
import logging
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from src.exceptions import RumorModelError, ScenarioError
from src.models import ModelId, Params, State2, State3, lift
from src.utils.invariants import BP_VARIANTS, hamiltonian_piqueira

from .simulation_config import SimOptions

logger = logging.getLogger(__name__)

OUTPUT_KINDS = ('csv', 'json')

SCENARIO_KEYS = frozenset({
    'name', 'model', 'rho1', 'rho2', 'mu', 'i0', 's0', 'r0',
    'step', 't_end', 'stop_s_below', 'record_every', 'outputs',
    'starts', 'levels', 'level_points', 'n', 'samples', 'tol', 'variant', 'seed',
    'rho1_values', 'rho2_values', 'mu_values',
})

_RATE_KEYS = ('rho1', 'rho2', 'mu')


def _number(data: Mapping[str, Any], key: str, default: Optional[float] = None) -> Optional[float]:
    value = data.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"'{key}' must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ScenarioError(f"'{key}' must be finite, got {value!r}")
    return float(value)


def _integer(data: Mapping[str, Any], key: str, default: int) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"'{key}' must be an integer, got {value!r}")
    return value


def _number_list(data: Mapping[str, Any], key: str) -> Tuple[float, ...]:
    values = data.get(key, ())
    if not isinstance(values, (list, tuple)):
        raise ScenarioError(f"'{key}' must be a list of numbers")
    return tuple(_number({key: v}, key) for v in values)


def _starts(data: Mapping[str, Any]) -> Tuple[Tuple[float, float], ...]:
    starts = data.get('starts', ())
    if not isinstance(starts, (list, tuple)):
        raise ScenarioError("'starts' must be a list of [R, I] pairs")
    parsed = []
    for start in starts:
        if not isinstance(start, (list, tuple)) or len(start) != 2:
            raise ScenarioError(f"each start must be an [R, I] pair, got {start!r}")
        parsed.append((_number({'R': start[0]}, 'R'), _number({'I': start[1]}, 'I')))
    return tuple(parsed)


@dataclass(frozen=True)
class Scenario:
    """Everything one command needs: model, rates, initial state and run settings.

    Attributes:
        name: Label copied into every summary
        model: Vector field to integrate
        params: Rates; None for the Belen-Pearce models
        init: Initial (I, S, R); planar models use its (R, I) projection
        sim: Integration settings
        outputs: Artifact kinds to write ('csv', 'json')
        starts: (R, I) starts of a phase portrait
        levels: First-integral values whose level curves are exported
        level_points: Grid size of each level curve
        n: Points of the equilibrium scan
        samples: Sample points of the first-integral check
        tol: Conservation verdict threshold
        variant: Belen-Pearce integral variant ('paper' or 'corrected')
        seed: Seed of the quasi-random sampler
        rho1_values, rho2_values, mu_values: Sweep grid axes
    """

    name: str
    model: ModelId
    params: Optional[Params]
    init: State3
    sim: SimOptions = field(default_factory=SimOptions)
    outputs: Tuple[str, ...] = OUTPUT_KINDS
    starts: Tuple[Tuple[float, float], ...] = ()
    levels: Tuple[float, ...] = ()
    level_points: int = 200
    n: int = 11
    samples: int = 1000
    tol: float = 1e-6
    variant: str = 'corrected'
    seed: int = 0
    rho1_values: Tuple[float, ...] = ()
    rho2_values: Tuple[float, ...] = ()
    mu_values: Tuple[float, ...] = ()

    def __post_init__(self):
        """Check cross-field consistency."""
        if self.model.uses_params and self.params is None:
            raise ScenarioError(f"model '{self.model.value}' needs rho1 and rho2")
        if not self.model.uses_params and self.params is not None:
            raise ScenarioError(f"model '{self.model.value}' runs at unit rates and takes no rho1/rho2/mu")
        unknown = set(self.outputs) - set(OUTPUT_KINDS)
        if unknown:
            raise ScenarioError(f"unknown output kinds {sorted(unknown)} (expected {list(OUTPUT_KINDS)})")
        if self.variant not in BP_VARIANTS:
            raise ScenarioError(f"unknown integral variant '{self.variant}' (expected {list(BP_VARIANTS)})")
        if self.level_points < 2:
            raise ScenarioError(f"level_points must be >= 2, got {self.level_points}")
        if self.samples < 1:
            raise ScenarioError(f"samples must be >= 1, got {self.samples}")
        if not self.tol > 0:
            raise ScenarioError(f"tol must be positive, got {self.tol}")
        if self.seed < 0:
            raise ScenarioError(f"seed must be non-negative, got {self.seed}")
        for start in self.starts:
            State2(*start)

    @property
    def planar_init(self) -> State2:
        return State2(self.init.r, self.init.i)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], name: str = 'custom') -> 'Scenario':
        """Build a scenario from a flat key-value mapping.

        A missing s0 is derived as 1 - i0 - r0. Initial data that does not
        sum to 1 is rescaled with a RenormalizationWarning.

        Raises:
            ScenarioError: On unknown keys or malformed values
        """
        if not isinstance(data, Mapping):
            raise ScenarioError("a scenario must be a JSON object")
        unknown = set(data) - SCENARIO_KEYS
        if unknown:
            raise ScenarioError(f"unknown scenario keys: {', '.join(sorted(unknown))}")

        try:
            model = ModelId.parse(str(data.get('model', ModelId.PIQUEIRA3.value)))
            params = None
            if model.uses_params:
                if data.get('rho1') is None or data.get('rho2') is None:
                    raise ScenarioError(f"model '{model.value}' needs rho1 and rho2")
                params = Params(_number(data, 'rho1'), _number(data, 'rho2'), _number(data, 'mu', 1.0))
            elif any(data.get(key) is not None for key in _RATE_KEYS):
                raise ScenarioError(f"model '{model.value}' runs at unit rates and takes no rho1/rho2/mu")

            i0 = _number(data, 'i0')
            r0 = _number(data, 'r0', 0.0)
            if i0 is None:
                raise ScenarioError("'i0' is required")
            s0 = _number(data, 's0')
            if s0 is None:
                init = lift(State2(r0, i0))
            else:
                init = State3.normalized(i0, s0, r0)

            defaults = SimOptions()
            sim = SimOptions(
                step=_number(data, 'step', defaults.step),
                t_end=_number(data, 't_end', defaults.t_end),
                stop_s_below=_number(data, 'stop_s_below', defaults.stop_s_below),
                record_every=_integer(data, 'record_every', defaults.record_every),
            )
            outputs = data.get('outputs', list(OUTPUT_KINDS))
            if not isinstance(outputs, (list, tuple)):
                raise ScenarioError("'outputs' must be a list")

            return cls(
                name=str(data.get('name', name)),
                model=model,
                params=params,
                init=init,
                sim=sim,
                outputs=tuple(str(kind) for kind in outputs),
                starts=_starts(data),
                levels=_number_list(data, 'levels'),
                level_points=_integer(data, 'level_points', 200),
                n=_integer(data, 'n', 11),
                samples=_integer(data, 'samples', 1000),
                tol=_number(data, 'tol', 1e-6),
                variant=str(data.get('variant', 'corrected')),
                seed=_integer(data, 'seed', 0),
                rho1_values=_number_list(data, 'rho1_values'),
                rho2_values=_number_list(data, 'rho2_values'),
                mu_values=_number_list(data, 'mu_values'),
            )
        except ScenarioError:
            raise
        except RumorModelError as exc:
            raise ScenarioError(str(exc)) from exc

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> 'Scenario':
        """Load a scenario JSON file."""
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding='utf-8'))
        except OSError as exc:
            raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"scenario file {path} is not valid JSON: {exc}") from exc
        logger.info("loaded scenario from %s", path)
        return cls.from_dict(data, name=path.stem)

    @classmethod
    def load(cls, source: str) -> 'Scenario':
        """Resolve a canned scenario name or a path to a scenario file."""
        if source in CANNED:
            return CANNED[source]()
        return cls.from_file(source)

    def to_dict(self) -> Dict[str, Any]:
        """Flat key-value form accepted by from_dict."""
        data: Dict[str, Any] = {
            'name': self.name,
            'model': self.model.value,
            'i0': self.init.i,
            's0': self.init.s,
            'r0': self.init.r,
            **self.sim.to_dict(),
            'outputs': list(self.outputs),
            'starts': [list(start) for start in self.starts],
            'levels': list(self.levels),
            'level_points': self.level_points,
            'n': self.n,
            'samples': self.samples,
            'tol': self.tol,
            'variant': self.variant,
            'seed': self.seed,
            'rho1_values': list(self.rho1_values),
            'rho2_values': list(self.rho2_values),
            'mu_values': list(self.mu_values),
        }
        if self.params is not None:
            data.update(self.params.to_dict())
        return data

    def with_overrides(self, **overrides: Any) -> 'Scenario':
        """Return a copy with flat keys replaced; None values are ignored.

        Overriding i0 or r0 without s0 derives S from the other two.
        """
        overrides = {key: value for key, value in overrides.items() if value is not None}
        if not overrides:
            return self
        data = self.to_dict()
        if ('i0' in overrides or 'r0' in overrides) and 's0' not in overrides:
            data.pop('s0')
        if 'model' in overrides and not ModelId.parse(str(overrides['model'])).uses_params:
            for key in _RATE_KEYS:
                data.pop(key, None)
        data.update(overrides)
        return Scenario.from_dict(data, name=self.name)

    def with_sim(self, sim: SimOptions) -> 'Scenario':
        return replace(self, sim=sim)

    @classmethod
    def create_default(cls) -> 'Scenario':
        """The three-population run with rho1=0.1, rho2=0.9, mu=0.8."""
        return fig2()


def fig1() -> Scenario:
    """Several starts of the full system at the rates of the population plots."""
    return Scenario(
        name='fig1',
        model=ModelId.PIQUEIRA3,
        params=Params.create_default(),
        init=State3(0.6, 0.4, 0.0),
        starts=((0.0, 0.9), (0.1, 0.6), (0.2, 0.3), (0.0, 0.5)),
    )


def fig2() -> Scenario:
    return Scenario(
        name='fig2',
        model=ModelId.PIQUEIRA3,
        params=Params.create_default(),
        init=State3(0.4, 0.5, 0.1),
        rho1_values=(0.1, 0.4, 0.8),
        rho2_values=(0.1, 0.4, 0.8),
        mu_values=(1.0,),
    )


def fig3() -> Scenario:
    """Initial data sums to 0.99 and is rescaled with a warning."""
    return Scenario(
        name='fig3',
        model=ModelId.PIQUEIRA3,
        params=Params.create_default(),
        init=State3.normalized(0.84, 0.05, 0.1),
    )


FIG4_STARTS = ((0.05, 0.9), (0.1, 0.8), (0.2, 0.6), (0.05, 0.5), (0.3, 0.4))


def fig4() -> Scenario:
    """Phase-plane bundle at rho1=0.4, rho2=0.8 with the level line of every start."""
    params = Params.create_threshold_demo()
    return Scenario(
        name='fig4',
        model=ModelId.PIQUEIRA_PLANAR,
        params=params,
        init=lift(State2(*FIG4_STARTS[0])),
        sim=SimOptions(step=5e-3, t_end=60.0, record_every=10),
        starts=FIG4_STARTS,
        levels=tuple(hamiltonian_piqueira(params, start) for start in FIG4_STARTS),
    )


def fig5() -> Scenario:
    """Start exactly on the equilibrium segment above the threshold."""
    return Scenario(
        name='fig5',
        model=ModelId.PIQUEIRA_PLANAR,
        params=Params.create_threshold_demo(),
        init=lift(State2(0.11, 0.89)),
    )


CANNED = {
    'fig1': fig1,
    'fig2': fig2,
    'fig3': fig3,
    'fig4': fig4,
    'fig5': fig5,
}
