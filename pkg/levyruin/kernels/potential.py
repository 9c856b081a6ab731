""" potential.py

    Potential of a compound Poisson process without Gaussian part or drift.
    With nu^(u) = int e^{iuy} nu'(y) dy the operator

        Q f(x) = (1/M) [f(x) + int n(y - x) f(y) dy]

    has multiplier (1/M)(1 + n^) and

        K(u) = -nu^(u) / (sqrt(2 pi) M)
        N(u) = K(u) / (1 - sqrt(2 pi) K(u))
        n^(u) = sqrt(2 pi) N(u)

    so Q inverts M I + C, with C f(x) = int nu'(y - x) f(y) dy. The pipeline
    splits n = -nu'/M + r: the first part is exact and r^ = (nu^/M)^2 /
    (1 + nu^/M) decays fast enough for a plain FFT.
"""

import math

from dataclasses import dataclass
from logging import Logger
from typing import Optional

import numpy as np

from scipy.interpolate import CubicSpline

from ..domain import SampledFunction
from ..errors import SingularResolventError, UnsupportedParameters
from ..levy import CompoundPoissonModel, LevyModel
from ..log import get_logger
from ..quadrature import Quadrature
from ..types import FloatArray, Real
from .operators import spline_of

FREQUENCY_CUTOFF = 1e-10
RESOLVENT_FLOOR = 1e-10
MAX_FFT_SIZE = 2 ** 22


def resolvent_symbols(model: CompoundPoissonModel, u: Real):
    """ (K(u), N(u)) on a frequency grid """
    nu_hat = model.fourier(u)
    K = -nu_hat / (math.sqrt(2.0 * math.pi) * model.mass)
    denominator = 1.0 - math.sqrt(2.0 * math.pi) * K
    return K, K / denominator


@dataclass
class PotentialKernel:
    """ n(x) = -nu'(x) / M + r(x), r tabulated on the FFT grid """
    model: CompoundPoissonModel
    x: FloatArray
    r: FloatArray

    def __post_init__(self):
        self._spline = CubicSpline(self.x, self.r)

    @property
    def mass(self) -> float:
        return self.model.mass

    def regular_part(self, x: Real):
        x = np.asarray(x, dtype=float)
        inside = (x >= self.x[0]) & (x <= self.x[-1])
        return np.where(inside, self._spline(np.clip(x, self.x[0], self.x[-1])), 0.0)

    def __call__(self, x: Real):
        x = np.asarray(x, dtype=float)
        return -self.model.density(x) / self.mass + self.regular_part(x)


class PotentialBuilder:
    def __init__(self, logger: Logger):
        self.logger = logger

    def build(self, model: LevyModel) -> PotentialKernel:
        if not isinstance(model, CompoundPoissonModel):
            raise UnsupportedParameters(
                    f'the potential Q is only bounded for compound Poisson models, got {model.name}; '
                    f'use the quasi-potential instead')
        if model.gaussian_coefficient != 0.0 or model.drift != 0.0:
            raise UnsupportedParameters('the compound Poisson potential needs A = 0 and gamma = 0')

        mass = model.mass
        u_max = self._frequency_extent(model)
        lo, hi = model.support
        half_width = 4.0 * max(abs(lo), abs(hi), 1.0)
        dx = math.pi / u_max
        size = int(2 ** math.ceil(math.log2(2.0 * half_width / dx)))
        if size > MAX_FFT_SIZE:
            size = MAX_FFT_SIZE
            self.logger.warning(f'potential FFT grid capped at {MAX_FFT_SIZE} points')
        dx = 2.0 * half_width / size

        x = -half_width + dx * np.arange(size)
        u = 2.0 * math.pi * np.fft.fftfreq(size, dx)
        du = 2.0 * math.pi / (size * dx)

        ratio = model.fourier(u) / mass
        denominator = 1.0 + ratio
        nonzero = u != 0.0
        if np.any(np.abs(denominator[nonzero]) < RESOLVENT_FLOOR):
            worst = u[nonzero][np.argmin(np.abs(denominator[nonzero]))]
            raise SingularResolventError(f'1 - sqrt(2 pi) K(u) vanishes at u = {worst:.6g}')

        r_hat = ratio ** 2 / denominator
        # r(x_j) = (du / 2 pi) sum_k r^(u_k) e^{-i u_k x_j}
        r = (du / (2.0 * math.pi)) * np.fft.fft(r_hat * np.exp(-1j * u * x[0])).real

        self.logger.info(f'potential kernel: M={mass:.6g}, {size} FFT points, dx={dx:.3g}, '
                         f'|u| <= {u_max:.3g}')
        return PotentialKernel(model, x, r)

    @staticmethod
    def _frequency_extent(model: CompoundPoissonModel) -> float:
        """ Frequency past which |K|^2 (and so r^) is below FREQUENCY_CUTOFF """
        u = 1.0
        while u < 1e7:
            ratio = np.abs(model.fourier(np.array([u, 1.5 * u, 2.0 * u]))) / model.mass
            if np.all(ratio ** 2 < FREQUENCY_CUTOFF):
                return u
            u *= 2.0
        return u


def potential_kernel(model: LevyModel, logger: Optional[Logger] = None) -> PotentialKernel:
    return PotentialBuilder(logger or get_logger('kernels')).build(model)


def _apply_correlation(kernel, f: SampledFunction, points: FloatArray, order: int = 8) -> np.ndarray:
    """ int kernel(y - x) f(y) dy for x in `points`, f a spline vanishing outside its grid """
    spline = spline_of(f)
    grid = f.grid
    out = np.zeros(points.size, dtype=np.result_type(f.values, float))
    for i, x in enumerate(points):
        # break cells at x, where the kernel has its cusp
        edges = np.unique(np.concatenate((grid, [x] if grid[0] < x < grid[-1] else [])))
        Y, W = Quadrature.gauss_legendre(edges[:-1], edges[1:], order)
        out[i] = np.sum(kernel(Y - x) * W * spline(Y))
    return out


def compound_poisson_potential(model: LevyModel, f: SampledFunction,
                               kernel: Optional[PotentialKernel] = None) -> SampledFunction:
    kernel = kernel or potential_kernel(model)
    correlation = _apply_correlation(kernel, f, f.grid)
    return f.with_values((f.values + correlation) / kernel.mass)


def potential_residual(model: LevyModel, f: SampledFunction, kernel: Optional[PotentialKernel] = None,
                       n_defect: int = 401) -> float:
    """
    Sup-norm over the grid of M Q f + C Q f - f. Expanding Q, this is
    int d(y - x) f(y) dy with the defect kernel

        d = n + nu'/M + (nu' * n)/M

    which vanishes identically for the exact n. The convolution nu' * n
    is taken by adaptive quadrature in real space.
    """
    kernel = kernel or potential_kernel(model)
    mass = kernel.mass
    span = f.grid[-1] - f.grid[0]
    lo, hi = model.support

    def convolved(v: float) -> float:
        def integrand(t):
            return float(model.density(t)) * float(kernel(v - t))
        breaks = sorted({lo, hi, min(max(v, lo), hi), min(max(0.0, lo), hi)})
        return sum(Quadrature.adaptive(integrand, a, b, what='defect convolution')
                   for a, b in zip(breaks[:-1], breaks[1:]) if b > a)

    v = np.linspace(-span, span, n_defect)
    defect = kernel(v) + model.density(v) / mass + np.array([convolved(x) for x in v]) / mass

    def defect_fn(y):
        return np.interp(y, v, defect, left=0.0, right=0.0)

    residual = _apply_correlation(defect_fn, f, f.grid)
    return float(np.max(np.abs(residual)))
