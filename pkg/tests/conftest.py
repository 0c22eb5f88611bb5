"""Shared fixtures."""

import pytest

from config import SimOptions
from src.algorithms import simulate
from src.models import ModelId, Params, State3


@pytest.fixture
def fig2_params() -> Params:
    return Params(rho1=0.1, rho2=0.9, mu=0.8)


@pytest.fixture
def demo_params() -> Params:
    return Params(rho1=0.4, rho2=0.8, mu=1.0)


@pytest.fixture
def fig2_init() -> State3:
    return State3(0.4, 0.5, 0.1)


@pytest.fixture(scope='session')
def fig2_trajectory():
    """Three-population run at h=1e-3 over [0, 200]."""
    params = Params(rho1=0.1, rho2=0.9, mu=0.8)
    options = SimOptions(step=1e-3, t_end=200.0, record_every=10)
    return simulate(ModelId.PIQUEIRA3, params, State3(0.4, 0.5, 0.1), options)
