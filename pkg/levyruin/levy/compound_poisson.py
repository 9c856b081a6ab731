""" compound_poisson.py

    Compound Poisson processes: a finite Levy measure of mass M, jumps at
    rate M with law nu'/M. The exponent is taken without compensator,

        lambda(z) = A z^2 / 2 - i gamma z + M - int e^{izy} nu'(y) dy

    Three density forms are available:
     - exponential: nu'(y) = C e^{-|y|/s}
     - gaussian:    nu'(y) = C e^{-y^2 / 2s^2}
     - tabulated:   piecewise linear through (points, values), zero outside
"""

import math

from typing import List, Literal, Optional

import numpy as np

from pydantic import Field, model_validator
from scipy.special import ndtri

from ..types import ComplexArray, FloatArray, Real
from .model import LevyModel


class CompoundPoissonModel(LevyModel):
    kind: Literal['compound_poisson'] = 'compound_poisson'

    form: Literal['exponential', 'gaussian', 'tabulated'] = 'exponential'
    C: float = Field(1.0, gt=0.0)
    s: float = Field(1.0, gt=0.0)
    points: Optional[List[float]] = None
    values: Optional[List[float]] = None

    @model_validator(mode='after')
    def _check_table(self):
        if self.form != 'tabulated':
            if self.points is not None or self.values is not None:
                raise ValueError(f'points/values are only used by the tabulated form, not by {self.form}')
            return self

        if self.points is None or self.values is None:
            raise ValueError('the tabulated form needs both points and values')
        if len(self.points) < 2 or len(self.points) != len(self.values):
            raise ValueError('points and values must have equal length of at least 2')
        if np.any(np.diff(self.points) <= 0.0):
            raise ValueError('points must be strictly increasing')
        if np.any(np.asarray(self.values) < 0.0) or not np.all(np.isfinite(self.values)):
            raise ValueError('tabulated density values must be finite and non-negative')
        if np.trapezoid(self.values, self.points) <= 0.0:
            raise ValueError('tabulated density has zero mass')
        return self

    @property
    def compensated(self) -> bool:
        return False

    @property
    def symmetric(self) -> bool:
        if self.gamma != 0.0:
            return False
        if self.form != 'tabulated':
            return True
        points, values = np.asarray(self.points), np.asarray(self.values)
        return bool(np.allclose(points, -points[::-1]) and np.allclose(values, values[::-1]))

    @property
    def small_jump_index(self) -> Optional[float]:
        return None

    @property
    def tail_index(self) -> float:
        return math.inf

    @property
    def mass(self) -> float:
        if self.form == 'exponential':
            return 2.0 * self.C * self.s
        if self.form == 'gaussian':
            return self.C * self.s * math.sqrt(2.0 * math.pi)
        return float(np.trapezoid(self.values, self.points))

    @property
    def support(self) -> tuple:
        """ Interval outside which nu' is negligible (below 1e-17 relative) """
        if self.form == 'exponential':
            return -40.0 * self.s, 40.0 * self.s
        if self.form == 'gaussian':
            return -9.0 * self.s, 9.0 * self.s
        return self.points[0], self.points[-1]

    def density(self, y: Real):
        y = np.asarray(y, dtype=float)
        if self.form == 'exponential':
            return self.C * np.exp(-np.abs(y) / self.s)
        if self.form == 'gaussian':
            return self.C * np.exp(-0.5 * (y / self.s) ** 2)
        return np.interp(y, self.points, self.values, left=0.0, right=0.0)

    def fourier(self, u: Real) -> ComplexArray:
        """ int e^{iuy} nu'(y) dy, vectorised """
        u = np.asarray(u, dtype=float)
        if self.form == 'exponential':
            return (2.0 * self.C * self.s / (1.0 + (self.s * u) ** 2)).astype(complex)
        if self.form == 'gaussian':
            return (self.C * self.s * math.sqrt(2.0 * math.pi) * np.exp(-0.5 * (self.s * u) ** 2)).astype(complex)
        return self._tabulated_fourier(u)

    def _tabulated_fourier(self, u: FloatArray) -> ComplexArray:
        y = np.asarray(self.points, dtype=float)
        f = np.asarray(self.values, dtype=float)
        y0, y1, f0, f1 = y[:-1], y[1:], f[:-1], f[1:]
        h = y1 - y0
        slope = (f1 - f0) / h

        flat = np.atleast_1d(u)[:, None]
        small = np.abs(flat * h) < 1e-3
        safe = np.where(flat == 0.0, 1.0, flat)
        e0, e1 = np.exp(1j * safe * y0), np.exp(1j * safe * y1)
        exact = (f1 * e1 - f0 * e0) / (1j * safe) + slope * (e1 - e0) / safe ** 2

        # second order expansion in u h where the closed form cancels
        mid = 0.5 * (y0 + y1)
        seg_mass = 0.5 * h * (f0 + f1)
        first = h ** 2 * (f1 - f0) / 12.0
        series = np.exp(1j * flat * mid) * (seg_mass + 1j * flat * first - 0.5 * (flat * h) ** 2 * seg_mass / 12.0)

        total = np.sum(np.where(small, series, exact), axis=1)
        return total.reshape(np.shape(u))

    def jump_exponent(self, z: float) -> complex:
        return complex(self.mass - complex(self.fourier(float(z))))

    def inverse_cdf(self, q: FloatArray) -> FloatArray:
        """ Quantile function of the jump law nu'/M """
        q = np.asarray(q, dtype=float)
        if self.form == 'exponential':
            centred = q - 0.5
            return -self.s * np.sign(centred) * np.log1p(-2.0 * np.abs(centred))
        if self.form == 'gaussian':
            return self.s * ndtri(q)

        y = np.asarray(self.points, dtype=float)
        f = np.asarray(self.values, dtype=float)
        h = np.diff(y)
        cumulative = np.concatenate(([0.0], np.cumsum(0.5 * h * (f[:-1] + f[1:]))))
        target = q * cumulative[-1]
        idx = np.clip(np.searchsorted(cumulative, target, side='right') - 1, 0, h.size - 1)

        # solve f0 s + (f1 - f0) s^2 / 2h = r inside the segment
        r = target - cumulative[idx]
        f0, slope = f[idx], (f[idx + 1] - f[idx]) / h[idx]
        disc = np.sqrt(np.maximum(f0 ** 2 + 2.0 * slope * r, 0.0))
        with np.errstate(divide='ignore', invalid='ignore'):
            offset = np.where(np.abs(slope) > 1e-14, 2.0 * r / (f0 + disc), r / np.where(f0 > 0.0, f0, 1.0))
        return y[idx] + np.clip(offset, 0.0, h[idx])
