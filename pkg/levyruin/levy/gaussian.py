""" gaussian.py

    Brownian motion with drift: the triplet (A, gamma, 0).
"""

import math

from typing import Literal, Optional

import numpy as np

from pydantic import Field

from ..types import Real
from .model import LevyModel


class GaussianModel(LevyModel):
    kind: Literal['gaussian'] = 'gaussian'

    A: float = Field(1.0, gt=0.0)

    @property
    def has_jumps(self) -> bool:
        return False

    @property
    def symmetric(self) -> bool:
        return self.gamma == 0.0

    @property
    def small_jump_index(self) -> Optional[float]:
        return None

    @property
    def tail_index(self) -> float:
        return math.inf

    def density(self, y: Real):
        return np.zeros_like(np.asarray(y, dtype=float))

    def jump_exponent(self, z: float) -> complex:
        return 0j

    def small_jump_moment(self) -> float:
        return 0.0

    def large_jump_moment(self) -> float:
        return 0.0
