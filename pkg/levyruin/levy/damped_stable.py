""" damped_stable.py

    Variance damped (tempered stable) processes,

        nu'(y) = C1 e^{-lambda1 |y|} |y|^{-alpha-1}   y < 0
                 C2 e^{-lambda2 y} y^{-alpha-1}        y > 0
"""

import math

from typing import Literal, Optional

import numpy as np

from pydantic import Field

from ..types import Real
from .model import LevyModel


class DampedStableModel(LevyModel):
    kind: Literal['damped_stable'] = 'damped_stable'

    alpha: float = Field(..., gt=0.0, lt=2.0)
    C1: float = Field(..., gt=0.0)
    C2: float = Field(..., gt=0.0)
    lambda1: float = Field(..., gt=0.0)
    lambda2: float = Field(..., gt=0.0)

    @property
    def symmetric(self) -> bool:
        return self.C1 == self.C2 and self.lambda1 == self.lambda2 and self.gamma == 0.0

    @property
    def small_jump_index(self) -> Optional[float]:
        return self.alpha

    @property
    def tail_index(self) -> float:
        return math.inf

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        u = np.abs(y)
        with np.errstate(divide='ignore', over='ignore'):
            left = self.C1 * np.exp(-self.lambda1 * u)
            right = self.C2 * np.exp(-self.lambda2 * u)
            return u ** (-self.alpha - 1.0) * np.where(y < 0.0, left, right)
