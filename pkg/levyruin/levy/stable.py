""" stable.py

    Stable processes. The law is fixed by (alpha, beta) in unit-scale form,

        lambda(z) = |z|^alpha (1 - i beta sign(z) tan(pi alpha / 2))    alpha != 1
        lambda(z) = |z| (1 + (2 i beta / pi) sign(z) log|z|)            alpha == 1

    times an optional `scale`, which acts as a time change: a process with
    scale s at time t is the unit process at time s t. alpha = 2 is read as
    the standard Wiener process, lambda(z) = z^2 / 2.

    The Levy density is |y|^{-alpha-1} (C1 1_{y<0} + C2 1_{y>0}). Unless C1
    and C2 are given explicitly they are derived from (alpha, beta, scale)
    so that the density reproduces the closed form exactly.
"""

import math

from typing import Literal, Optional, Tuple

import numpy as np

from pydantic import Field, model_validator
from scipy.special import gamma as gamma_fn

from ..errors import UnsupportedParameters
from ..types import Real
from .model import LevyModel


def unit_constant_sum(alpha: float) -> float:
    """ C1 + C2 of the unit-scale stable law """
    if alpha == 1.0:
        return 2.0 / math.pi
    return 1.0 / (-gamma_fn(-alpha) * math.cos(math.pi * alpha / 2.0))


def stable_case(alpha: float, beta: float) -> str:
    """
    Admissible parameter case for the quasi-potential layer: 'I'
    (alpha != 1, |beta| < 1), 'II' (1 < alpha < 2, beta = +-1), 'III'
    (alpha = 1, beta = 0) or 'wiener' (alpha = 2).
    """
    if alpha == 2.0:
        return 'wiener'
    if 0.0 < alpha < 2.0 and alpha != 1.0 and -1.0 < beta < 1.0:
        return 'I'
    if 1.0 < alpha < 2.0 and abs(beta) == 1.0:
        return 'II'
    if alpha == 1.0 and beta == 0.0:
        return 'III'
    raise UnsupportedParameters(
            f'stable parameters alpha={alpha}, beta={beta} fall outside the admissible cases: '
            f'I (0<alpha<2, alpha!=1, -1<beta<1), II (1<alpha<2, beta=+-1), III (alpha=1, beta=0)')


class StableModel(LevyModel):
    kind: Literal['stable'] = 'stable'

    alpha: float = Field(..., gt=0.0, le=2.0)
    beta: float = Field(0.0, ge=-1.0, le=1.0)
    scale: float = Field(1.0, gt=0.0)
    C1: Optional[float] = Field(None, ge=0.0)
    C2: Optional[float] = Field(None, ge=0.0)
    gamma: Optional[float] = None

    @model_validator(mode='after')
    def _check(self):
        if self.A != 0.0:
            raise ValueError('stable models carry no Gaussian part, A must be 0 (use alpha = 2 for Brownian motion)')
        if (self.C1 is None) != (self.C2 is None):
            raise ValueError('C1 and C2 must be given together')
        if self.C1 is not None and self.C1 + self.C2 <= 0.0:
            raise ValueError('C1 + C2 must be positive')
        return self

    @classmethod
    def from_levy_constants(cls, alpha: float, C1: float, C2: float, gamma: Optional[float] = None) -> 'StableModel':
        """ Model whose closed form matches the given density constants exactly """
        total = C1 + C2
        return cls(alpha=alpha, beta=(C2 - C1) / total, scale=total / unit_constant_sum(alpha),
                   C1=C1, C2=C2, gamma=gamma)

    @property
    def is_wiener(self) -> bool:
        return self.alpha == 2.0

    @property
    def has_jumps(self) -> bool:
        return not self.is_wiener

    @property
    def gaussian_coefficient(self) -> float:
        return self.scale if self.is_wiener else 0.0

    @property
    def symmetric(self) -> bool:
        C1, C2 = self.levy_constants
        return C1 == C2 and (self.gamma is None or self.gamma == 0.0)

    @property
    def small_jump_index(self) -> Optional[float]:
        return None if self.is_wiener else self.alpha

    @property
    def tail_index(self) -> float:
        return math.inf if self.is_wiener else self.alpha

    @property
    def levy_constants(self) -> Tuple[float, float]:
        if self.is_wiener:
            return 0.0, 0.0
        if self.C1 is not None:
            return self.C1, self.C2
        total = self.scale * unit_constant_sum(self.alpha)
        return 0.5 * total * (1.0 - self.beta), 0.5 * total * (1.0 + self.beta)

    @property
    def constants_consistent(self) -> bool:
        """ Whether explicit C1, C2 agree with (alpha, beta, scale) """
        if self.C1 is None or self.is_wiener:
            return True
        reference = StableModel(alpha=self.alpha, beta=self.beta, scale=self.scale).levy_constants
        return bool(np.allclose((self.C1, self.C2), reference, rtol=1e-9, atol=0.0))

    @property
    def strict_gamma(self) -> float:
        """ Drift gamma making the process strictly stable """
        if self.is_wiener or self.alpha == 1.0:
            return 0.0
        C1, C2 = self.levy_constants
        return -(C2 - C1) / (self.alpha - 1.0)

    @property
    def effective_gamma(self) -> float:
        return self.strict_gamma if self.gamma is None else self.gamma

    @property
    def drift(self) -> float:
        return self.effective_gamma

    @property
    def drift_offset(self) -> float:
        """ Drift on top of the strictly stable law """
        return 0.0 if self.gamma is None else self.gamma - self.strict_gamma

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        if self.is_wiener:
            return np.zeros_like(y)
        C1, C2 = self.levy_constants
        with np.errstate(divide='ignore'):
            return np.abs(y) ** (-self.alpha - 1.0) * np.where(y < 0.0, C1, C2)

    def unit_exponent(self, z: float) -> complex:
        if z == 0.0:
            return 0j
        if self.is_wiener:
            return complex(0.5 * z * z, 0.0)
        sign = math.copysign(1.0, z)
        if self.alpha == 1.0:
            return abs(z) * complex(1.0, 2.0 * self.beta / math.pi * sign * math.log(abs(z)))
        return abs(z) ** self.alpha * complex(1.0, -self.beta * sign * math.tan(math.pi * self.alpha / 2.0))

    def characteristic_exponent(self, z: float) -> complex:
        z = float(z)
        return self.scale * self.unit_exponent(z) - 1j * self.drift_offset * z

    def jump_exponent(self, z: float) -> complex:
        if self.is_wiener:
            return 0j
        return self.characteristic_exponent(z) + 1j * self.effective_gamma * z

    def small_jump_moment(self) -> float:
        C1, C2 = self.levy_constants
        return (C2 - C1) / (1.0 - self.alpha)

    def large_jump_moment(self) -> float:
        C1, C2 = self.levy_constants
        return (C2 - C1) / (self.alpha - 1.0)

    def uncompensated_drift(self) -> float:
        return self.effective_gamma - self.small_jump_moment()

    def compensated_drift(self) -> float:
        return self.effective_gamma + self.large_jump_moment()
