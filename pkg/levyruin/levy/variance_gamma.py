""" variance_gamma.py

    Variance Gamma process,

        nu'(y) = C1 e^{-G |y|} / |y|   y < 0
                 C2 e^{-M y} / y       y > 0

    The jump part of lambda has a closed form, so no quadrature is needed.
"""

import cmath
import math

from typing import Literal, Optional

import numpy as np

from pydantic import Field

from ..types import Real
from .model import LevyModel


class VarianceGammaModel(LevyModel):
    kind: Literal['variance_gamma'] = 'variance_gamma'

    C1: float = Field(..., gt=0.0)
    C2: float = Field(..., gt=0.0)
    G: float = Field(..., gt=0.0)
    M: float = Field(..., gt=0.0)

    @property
    def symmetric(self) -> bool:
        return self.C1 == self.C2 and self.G == self.M and self.gamma == 0.0

    @property
    def small_jump_index(self) -> Optional[float]:
        return 0.0

    @property
    def tail_index(self) -> float:
        return math.inf

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        u = np.abs(y)
        with np.errstate(divide='ignore'):
            return np.where(y < 0.0, self.C1 * np.exp(-self.G * u), self.C2 * np.exp(-self.M * u)) / u

    def small_jump_moment(self) -> float:
        right = self.C2 * -math.expm1(-self.M) / self.M
        left = self.C1 * -math.expm1(-self.G) / self.G
        return right - left

    def large_jump_moment(self) -> float:
        right = self.C2 * math.exp(-self.M) / self.M
        left = self.C1 * math.exp(-self.G) / self.G
        return right - left

    def jump_exponent(self, z: float) -> complex:
        z = float(z)
        uncompensated = self.C2 * cmath.log(1.0 - 1j * z / self.M) + self.C1 * cmath.log(1.0 + 1j * z / self.G)
        return uncompensated + 1j * z * self.small_jump_moment()
