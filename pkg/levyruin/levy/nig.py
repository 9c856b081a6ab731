""" nig.py

    Normal inverse Gaussian process, nu'(y) = C e^{beta y} K_1(|y|) / |y|.
    The exponentially scaled Bessel function keeps the tails finite in
    floating point.
"""

import math

from typing import Literal, Optional

import numpy as np

from pydantic import Field
from scipy.special import k1e

from ..types import Real
from .model import LevyModel


class NIGModel(LevyModel):
    kind: Literal['nig'] = 'nig'

    C: float = Field(..., gt=0.0)
    beta: float = Field(0.0, ge=-1.0, le=1.0)

    @property
    def symmetric(self) -> bool:
        return self.beta == 0.0 and self.gamma == 0.0

    @property
    def small_jump_index(self) -> Optional[float]:
        return 1.0

    @property
    def tail_index(self) -> float:
        # K_1(u) ~ sqrt(pi / 2u) e^{-u}, so |beta| = 1 leaves a u^{-3/2} tail
        return math.inf if abs(self.beta) < 1.0 else 0.5

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        u = np.abs(y)
        with np.errstate(divide='ignore', invalid='ignore'):
            return self.C * np.exp(self.beta * y - u) * k1e(u) / u
