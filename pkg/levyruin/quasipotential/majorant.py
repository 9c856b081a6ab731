""" majorant.py

    Checks |Phi(x, y)| <= phi(y - x) at random sample points. Kernels from the
    general construction use the convolution bound of |N1|, |N2| cross
    terms; every other kernel uses the largest value on the cross section
    y - x = d.
"""

from logging import Logger
from typing import Callable, List, Optional, Tuple

import numpy as np

from pydantic import BaseModel
from scipy.optimize import minimize_scalar

from ..log import get_logger
from .base import QuasiPotentialKernel
from .grid import GridBacked

SLACK = 1e-10
SWEEP_POINTS = 129


class MajorantReport(BaseModel):
    n_samples: int
    passed: bool
    max_ratio: float = 0.0
    violations: List[Tuple[float, float, float, float]] = []
    """ (x, y, Phi, phi) at each violation """


def cross_section_maximum(kernel: QuasiPotentialKernel, d: float) -> float:
    """ sup over x of |Phi(x, x + d)|, by a sweep refined with a bounded search """
    lo = max(kernel.lower, kernel.lower - d)
    hi = min(kernel.upper, kernel.upper - d)
    if not hi > lo:
        return 0.0

    def value(x):
        return abs(float(kernel(x, x + d)))

    xs = np.linspace(lo, hi, SWEEP_POINTS)
    samples = np.abs(kernel(xs, xs + d))
    best = int(np.argmax(samples))
    left, right = xs[max(best - 1, 0)], xs[min(best + 1, SWEEP_POINTS - 1)]
    refined = minimize_scalar(lambda x: -value(x), bounds=(left, right), method='bounded',
                              options={'xatol': 1e-12 * max(1.0, hi - lo)})
    return max(float(samples[best]), -float(refined.fun))


def _sample_points(kernel: QuasiPotentialKernel, n_samples: int, rng: np.random.Generator):
    if isinstance(kernel, GridBacked):
        i = rng.integers(1, kernel.n - 1, size=n_samples)
        j = rng.integers(1, kernel.n - 2, size=n_samples)
        j = np.where(j >= i, j + 1, j)
        return kernel.grid[i], kernel.grid[j]
    x = rng.uniform(kernel.lower, kernel.upper, size=n_samples)
    y = rng.uniform(kernel.lower, kernel.upper, size=n_samples)
    return x, y


def majorant_check(kernel: QuasiPotentialKernel, n_samples: int, seed: int = 0,
                   logger: Optional[Logger] = None) -> MajorantReport:
    logger = logger or get_logger('quasipotential')
    if n_samples <= 0:
        return MajorantReport(n_samples=0, passed=True)

    construction = getattr(kernel, 'construction', None)
    bound: Callable[[float], float]
    if construction is not None:
        bound = construction.majorant
    else:
        def bound(d):
            return cross_section_maximum(kernel, d)

    rng = np.random.default_rng(seed)
    xs, ys = _sample_points(kernel, n_samples, rng)
    violations, max_ratio = [], 0.0
    for x, y in zip(xs, ys):
        value = abs(float(kernel(x, y)))
        limit = bound(float(y - x))
        if limit > 0.0:
            max_ratio = max(max_ratio, value / limit)
        if value > limit * (1.0 + SLACK) and value > 0.0:
            violations.append((float(x), float(y), value, limit))

    logger.info(f'majorant check on {kernel.kind}: {n_samples} points, {len(violations)} violations, '
                f'max ratio {max_ratio:.6f}')
    return MajorantReport(n_samples=n_samples, passed=not violations, max_ratio=max_ratio, violations=violations)
