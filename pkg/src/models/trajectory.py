"""Recorded simulation output."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..exceptions import InvalidStateError
from .params import ModelId
from .state import State3


class StopReason(str, Enum):
    HORIZON_REACHED = 'HorizonReached'
    SPREADER_EXTINCT = 'SpreaderExtinct'
    LEFT_DOMAIN = 'LeftDomain'


@dataclass(frozen=True)
class Trajectory:
    """Time-stamped states of a run, lifted to (I, S, R).

    Attributes:
        times: Strictly increasing timestamps starting at 0
        states: Array of shape (n, 3), columns I, S, R
        h_values: First-integral value per record, or None when no integral applies
        stop_reason: Why the run ended
        model: Model that produced the run
    """

    times: np.ndarray
    states: np.ndarray
    h_values: Optional[np.ndarray]
    stop_reason: StopReason
    model: ModelId

    def __post_init__(self):
        if self.states.shape != (len(self.times), 3):
            raise InvalidStateError(f"states of shape {self.states.shape} do not match {len(self.times)} times")
        if self.h_values is not None and len(self.h_values) != len(self.times):
            raise InvalidStateError(f"{len(self.h_values)} integral values for {len(self.times)} times")
        for array in (self.times, self.states, self.h_values):
            if array is not None:
                array.setflags(write=False)

    @property
    def i(self) -> np.ndarray:
        return self.states[:, 0]

    @property
    def s(self) -> np.ndarray:
        return self.states[:, 1]

    @property
    def r(self) -> np.ndarray:
        return self.states[:, 2]

    @property
    def t_final(self) -> float:
        return float(self.times[-1])

    def state_at(self, index: int) -> State3:
        return State3.from_array(self.states[index])

    @property
    def final_state(self) -> State3:
        return self.state_at(-1)

    def __len__(self) -> int:
        return len(self.times)
