""" sector.py

    Sectoriality diagnostics for S: the cosine transform of the kernel must
    be positive, and the numerical range of S must sit inside a sector
    |arg z| <= pi beta / 2 with beta <= 1. The sector is estimated from the
    quadratic forms (S f, f) of trial functions.
"""

import math

from typing import List, Optional

import numpy as np

from pydantic import BaseModel

from ..domain import SampledFunction
from ..types import FloatArray
from .convolution import ConvolutionKernel
from .operators import apply_S


class SectorReport(BaseModel):
    frequencies: List[float]
    cosine_transform: List[float]
    cosine_positive: bool
    max_arg: float
    beta_hat: float
    sectorial: bool
    strongly_sectorial: bool
    decay_ok: bool
    n_trials: int


def quadratic_form(Sf: SampledFunction, f: SampledFunction) -> complex:
    """ (S f, f) = int S f(x) conj(f(x)) dx, trapezoidal on the grid """
    return complex(np.trapezoid(Sf.values * np.conj(f.values), f.grid))


def random_trial_functions(grid: FloatArray, count: int, seed: int = 0, complex_valued: bool = True,
                           modes: int = 6) -> List[SampledFunction]:
    """
    Random smooth functions vanishing to first order at both grid ends:
    (x - lo)^2 (hi - x)^2 times a random trigonometric polynomial.
    """
    rng = np.random.default_rng(seed)
    grid = np.asarray(grid, dtype=float)
    lo, hi = grid[0], grid[-1]
    s = (grid - lo) / (hi - lo)
    envelope = (s * (1.0 - s)) ** 2
    k = np.arange(modes)

    trials = []
    for _ in range(count):
        coefficients = rng.standard_normal(modes) / (1.0 + k)
        phases = rng.uniform(0.0, 2.0 * math.pi, modes)
        values = np.cos(math.pi * np.outer(s, k) + phases) @ coefficients
        if complex_valued:
            imag = rng.standard_normal(modes) / (1.0 + k)
            values = values + 1j * (np.sin(math.pi * np.outer(s, k + 1)) @ imag)
        trials.append(SampledFunction(grid, envelope * values, boundary_class=True))
    return trials


def sector_diagnostics(kernel: ConvolutionKernel, trial_functions: List[SampledFunction],
                       frequencies: Optional[FloatArray] = None) -> SectorReport:
    if frequencies is None:
        frequencies = np.logspace(-2.0, 3.0, 26)
    frequencies = np.asarray(frequencies, dtype=float)

    if kernel.model is not None:
        transform = kernel.cosine_transform(frequencies) + kernel.A_half
    else:
        transform = np.full(frequencies.shape, np.nan)
    positive = bool(np.all(np.isfinite(transform)) and np.all(transform > 0.0))

    args = []
    for f in trial_functions:
        form = quadratic_form(apply_S(kernel, f), f)
        if abs(form) > 0.0:
            args.append(abs(math.atan2(form.imag, form.real)))
    max_arg = max(args) if args else 0.0
    beta_hat = max_arg / (0.5 * math.pi)

    return SectorReport(
            frequencies=frequencies.tolist(),
            cosine_transform=transform.tolist(),
            cosine_positive=positive,
            max_arg=max_arg,
            beta_hat=beta_hat,
            sectorial=max_arg < 0.5 * math.pi,
            strongly_sectorial=beta_hat < 1.0,
            decay_ok=kernel.decays,
            n_trials=len(trial_functions))
