"""Configuration package."""

from .simulation_config import SimOptions
from .scenario import CANNED, Scenario

__all__ = ['SimOptions', 'Scenario', 'CANNED']
