""" wiener.py

    Green's function of -(A/2) d^2/dx^2 on [-b, a] with zero boundary
    values, the quasi-potential of Brownian motion.
"""

import numpy as np

from ..errors import DomainError
from ..types import Real
from .base import QuasiPotentialKernel


def wiener_green(a: float, b: float, x: Real, t: Real):
    """
    2 (t + b)(a - x) / (a + b)   for t <= x
    2 (a - t)(b + x) / (a + b)   for t > x
    """
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    tol = 1e-12 * (a + b)
    if np.any((x < -b - tol) | (x > a + tol) | (t < -b - tol) | (t > a + tol)):
        raise DomainError(f'wiener_green needs -b <= x, t <= a on [{-b}, {a}]')
    value = np.where(t <= x, (t + b) * (a - x), (a - t) * (b + x)) * 2.0 / (a + b)
    return float(value) if value.ndim == 0 else value


class WienerGreenKernel(QuasiPotentialKernel):
    kind = 'wiener'

    def __init__(self, lower: float, upper: float, A: float = 1.0):
        super().__init__(lower, upper, symmetric=True, alpha=2.0)
        self.A = A

    def _evaluate(self, x, y):
        return wiener_green(self.upper, -self.lower, x, y) / self.A

    def describe(self) -> dict:
        return {**super().describe(), 'A': self.A}
