""" custom.py

    A Levy density supplied as a Python callable together with the decay
    exponents the kernel layer needs. Custom models have no JSON form.
"""

import math

from typing import Callable, Literal, Optional

import numpy as np

from pydantic import Field

from ..errors import MalformedInput
from ..types import Real
from .model import LevyModel


class CustomModel(LevyModel):
    kind: Literal['custom'] = 'custom'

    nu: Callable
    jump_index: Optional[float] = Field(None, lt=2.0)
    decay_index: float = Field(math.inf, gt=0.0)
    total_mass: Optional[float] = Field(None, gt=0.0)
    is_symmetric: bool = False

    @property
    def small_jump_index(self) -> Optional[float]:
        return self.jump_index

    @property
    def tail_index(self) -> float:
        return self.decay_index

    @property
    def mass(self) -> Optional[float]:
        return self.total_mass

    @property
    def compensated(self) -> bool:
        return self.total_mass is None

    @property
    def symmetric(self) -> bool:
        return self.is_symmetric and self.gamma == 0.0

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        return np.asarray(np.vectorize(self.nu, otypes=[float])(y), dtype=float)

    def descriptor(self) -> dict:
        raise MalformedInput('custom models carry a Python callable and cannot be written as JSON')
