""" base.py

    Quasi-potential kernels Phi(x, y) on an interval [-b, a]. The operator
    B f(x) = int Phi(x, y) f(y) dy inverts -L on functions supported in
    the interval; Phi vanishes on the boundary and is non-negative.
"""

import abc

from typing import Callable, NamedTuple, Optional

import numpy as np

from ..domain import Domain
from ..errors import MalformedInput
from ..quadrature import Quadrature
from ..types import Real, Singularity

BOUNDARY_TOLERANCE = 1e-12


class ShiftReduction(NamedTuple):
    c: float
    delta: float

    def to_symmetric(self, x: Real):
        """ Point of [-c, c] matching x in [-b, a] """
        return np.asarray(x, dtype=float) + self.delta


def shift_to_symmetric(lower: float, upper: float) -> ShiftReduction:
    """
    Phi(x, y, -b, a) = Phi(x + delta, y + delta, c) with c = (a + b) / 2
    and delta = (b - a) / 2.
    """
    if not lower < 0.0 < upper:
        raise MalformedInput(f'the interval [{lower}, {upper}] must contain the origin')
    a, b = upper, -lower
    return ShiftReduction(0.5 * (a + b), 0.5 * (b - a))


class QuasiPotentialKernel(abc.ABC):
    kind: str = 'abstract'

    def __init__(self, lower: float, upper: float, diagonal_singularity: str = Singularity.NONE,
                 diagonal_exponent: float = 0.0, symmetric: bool = False, alpha: Optional[float] = None):
        if not lower < upper:
            raise MalformedInput(f'empty interval [{lower}, {upper}]')
        self.lower = float(lower)
        self.upper = float(upper)
        self.diagonal_singularity = diagonal_singularity
        self.diagonal_exponent = diagonal_exponent
        self.symmetric = symmetric
        self.alpha = alpha

    @property
    def domain(self) -> Domain:
        return Domain.single(self.lower, self.upper)

    @property
    def length(self) -> float:
        return self.upper - self.lower

    @abc.abstractmethod
    def _evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """ Phi at interior points of equal shape """
        pass

    def __call__(self, x: Real, y: Real):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        tol = BOUNDARY_TOLERANCE * max(1.0, self.length)
        interior = (x > self.lower + tol) & (x < self.upper - tol) & (y > self.lower + tol) & (y < self.upper - tol)
        out = np.zeros(x.shape)
        if np.any(interior):
            out[interior] = self._evaluate(x[interior], y[interior])
        return float(out) if out.ndim == 0 else out

    def boundary_values(self, y: Real) -> np.ndarray:
        """ Phi(end, y) and Phi(y, end) without the boundary mask """
        y = np.atleast_1d(np.asarray(y, dtype=float))
        ends = [np.full_like(y, self.lower), np.full_like(y, self.upper)]
        return np.concatenate([self._evaluate(end, y) for end in ends] + [self._evaluate(y, end) for end in ends])

    def apply(self, f: Callable[[float], float], x: float) -> float:
        """ (B f)(x) by adaptive quadrature, split at the diagonal """
        def integrand(y):
            return float(self(x, y)) * f(y)

        total = 0.0
        for lo, hi in ((self.lower, x), (x, self.upper)):
            if hi > lo:
                total += Quadrature.adaptive(integrand, lo, hi, what='quasi-potential application')
        return total

    def describe(self) -> dict:
        return {'kind': self.kind, 'domain': [self.lower, self.upper],
                'diagonal_singularity': self.diagonal_singularity}
