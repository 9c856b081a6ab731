""" meixner.py

    Meixner process, nu'(y) = C e^{beta y} / (y sinh(pi y)), |beta| < pi.
"""

import math

from typing import Literal, Optional

import numpy as np

from pydantic import Field, field_validator

from ..types import Real
from .model import LevyModel


class MeixnerModel(LevyModel):
    kind: Literal['meixner'] = 'meixner'

    C: float = Field(..., gt=0.0)
    beta: float = 0.0

    @field_validator('beta')
    @classmethod
    def _check_beta(cls, value: float) -> float:
        if not -math.pi < value < math.pi:
            raise ValueError(f'Meixner beta must lie in (-pi, pi), got {value}')
        return value

    @property
    def symmetric(self) -> bool:
        return self.beta == 0.0 and self.gamma == 0.0

    @property
    def small_jump_index(self) -> Optional[float]:
        return 1.0

    @property
    def tail_index(self) -> float:
        return math.inf

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        u = np.abs(y)
        # y sinh(pi y) = |y| e^{pi |y|} (1 - e^{-2 pi |y|}) / 2
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            return 2.0 * self.C * np.exp(self.beta * y - math.pi * u) / (u * -np.expm1(-2.0 * math.pi * u))
