""" stable.py

    Closed-form quasi-potentials of stable processes on [-a, a], in the
    normalization of the unit-scale exponent |z|^alpha (1 - i beta sign(z)
    tan(pi alpha / 2)). A model with scale s divides them by s.

    Admissible cases:
     - I: alpha != 1, |beta| < 1, an incomplete beta function
     - II: 1 < alpha < 2, beta = +-1, elementary
     - III: alpha = 1, beta = 0, logarithmic
"""

import math

from typing import NamedTuple

import numpy as np

from scipy.optimize import brentq
from scipy.special import betainc, beta as beta_fn, gamma as gamma_fn

from ..errors import DomainError, UnsupportedParameters
from ..levy.stable import stable_case
from ..types import Real, Singularity
from .base import QuasiPotentialKernel, shift_to_symmetric

KAC_SCALE = 2.0 / math.pi
""" Scale of the stable alpha = 1 law whose quasi-potential is Kac's formula """


class CaseOneConstants(NamedTuple):
    mu: float
    rho: float
    C_alpha: float


def solve_rho(alpha: float, beta: float) -> float:
    """
    rho with sin(pi rho) = ((1 - beta) / (1 + beta)) sin(pi (mu - rho)),
    mu = 2 - alpha, and 0 < mu - rho < 1.
    """
    mu = 2.0 - alpha
    if beta == 0.0:
        return 0.5 * mu
    ratio = (1.0 - beta) / (1.0 + beta)

    def fn(rho):
        return math.sin(math.pi * rho) - ratio * math.sin(math.pi * (mu - rho))

    lo, hi = max(0.0, mu - 1.0), min(mu, 1.0)
    if not fn(lo) * fn(hi) < 0.0:
        raise UnsupportedParameters(f'no bracketed root for rho at alpha={alpha}, beta={beta}')
    return brentq(fn, lo, hi, xtol=1e-15, rtol=4.0 * np.finfo(float).eps)


def case_one_constants(alpha: float, beta: float) -> CaseOneConstants:
    if stable_case(alpha, beta) != 'I':
        raise UnsupportedParameters(f'alpha={alpha}, beta={beta} is not in case I')
    mu = 2.0 - alpha
    rho = solve_rho(alpha, beta)
    C_alpha = math.sin(math.pi * rho) / (math.sin(math.pi * alpha / 2.0) * (1.0 - beta)
                                         * gamma_fn(1.0 - rho) * gamma_fn(1.0 + rho - mu))
    return CaseOneConstants(mu, rho, C_alpha)


def _incomplete_beta(s: np.ndarray, p: float, q: float) -> np.ndarray:
    """ int_0^s t^{p-1} (1-t)^{q-1} dt for p > 0 and q > -1 """
    if q > 0.0:
        return betainc(p, q, s) * beta_fn(p, q)
    # B(s; p, q) = [(p + q) B(s; p, q + 1) - s^p (1 - s)^q] / q
    return ((p + q) * betainc(p, q + 1.0, s) * beta_fn(p, q + 1.0) - s ** p * (1.0 - s) ** q) / q


def _check_square(a: float, x: np.ndarray, y: np.ndarray, what: str):
    tol = 1e-12 * a
    if np.any(np.abs(x) > a + tol) or np.any(np.abs(y) > a + tol):
        raise DomainError(f'{what} needs |x|, |y| <= a = {a}')


def _case_one(constants: CaseOneConstants, a: float, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    mu, rho, C_alpha = constants
    d = x - y
    z0 = a * np.abs(d)
    z1 = a * a - x * y
    out = np.zeros(np.broadcast(x, y).shape)

    diagonal = (d == 0.0) & (z1 > 0.0)
    if np.any(diagonal):
        # int_0^{z1} z^{-mu} dz
        out[diagonal] = C_alpha * (2.0 * a) ** (mu - 1.0) * z1[diagonal] ** (1.0 - mu) / (1.0 - mu) \
            if mu < 1.0 else np.inf

    regular = (d != 0.0) & (z1 > z0)
    if np.any(regular):
        # z = z0 (1 + s) / (1 - s) turns the z-integral into B(s1; p, mu - 1)
        z0r, z1r, dr = z0[regular], z1[regular], d[regular]
        s1 = (z1r - z0r) / (z1r + z0r)
        values = np.empty_like(s1)
        for side, e0 in ((dr > 0.0, rho - mu), (dr < 0.0, -rho)):
            if np.any(side):
                values[side] = _incomplete_beta(s1[side], e0 + 1.0, mu - 1.0)
        out[regular] = C_alpha * (2.0 * a) ** (mu - 1.0) * (2.0 * z0r) ** (1.0 - mu) * values
    return out


def stable_kernel_case1(alpha: float, beta: float, a: float, x: Real, y: Real):
    """
    C_alpha (2a)^{mu-1} int_{a|x-y|}^{a^2-xy} [z^2 - a^2 (x-y)^2]^{-rho}
    [z - a(x-y)]^{2rho-mu} dz
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    _check_square(a, x, y, 'stable_kernel_case1')
    out = _case_one(case_one_constants(alpha, beta), a, x, y)
    return float(out) if out.ndim == 0 else out


def stable_kernel_onesided(alpha: float, beta: float, a: float, x: Real, y: Real):
    """
    beta = 1:  cos(pi alpha / 2) / ((2a)^{alpha-1} Gamma(alpha))
               {[a(|x-y| + y - x)]^{alpha-1} - (a-x)^{alpha-1} (a+y)^{alpha-1}}
    beta = -1 is the mirror image (x, y) -> (-x, -y).
    """
    if stable_case(alpha, beta) != 'II':
        raise UnsupportedParameters(f'alpha={alpha}, beta={beta} is not in case II')
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    _check_square(a, x, y, 'stable_kernel_onesided')
    if beta < 0.0:
        x, y = -x, -y
    power = alpha - 1.0
    factor = math.cos(math.pi * alpha / 2.0) / ((2.0 * a) ** power * gamma_fn(alpha))
    jump = np.maximum(a * (np.abs(x - y) + y - x), 0.0) ** power
    out = factor * (jump - np.maximum(a - x, 0.0) ** power * np.maximum(a + y, 0.0) ** power)
    return float(out) if out.ndim == 0 else out


def cauchy_kernel(a: float, x: Real, y: Real):
    """
    Kac's formula (1/4) log{[a^2 - xy + R] / [a^2 - xy - R]} with
    R = sqrt((a^2 - x^2)(a^2 - y^2)); infinite on the diagonal.
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    _check_square(a, x, y, 'cauchy_kernel')
    P = a * a - x * y
    R = np.sqrt(np.maximum(a * a - x * x, 0.0) * np.maximum(a * a - y * y, 0.0))
    with np.errstate(divide='ignore', invalid='ignore'):
        # (P + R)(P - R) = a^2 (x - y)^2
        out = 0.5 * np.log((P + R) / (a * np.abs(x - y)))
    out = np.where(R == 0.0, 0.0, out)
    return float(out) if out.ndim == 0 else out


class _SymmetrizedKernel(QuasiPotentialKernel):
    """ Closed form on [-c, c] evaluated on [-b, a] through the shift reduction """

    def __init__(self, lower: float, upper: float, scale: float, **kwargs):
        super().__init__(lower, upper, **kwargs)
        self.reduction = shift_to_symmetric(lower, upper)
        self.scale = scale

    def _evaluate(self, x, y):
        c = self.reduction.c
        xs = np.clip(self.reduction.to_symmetric(x), -c, c)
        ys = np.clip(self.reduction.to_symmetric(y), -c, c)
        return self._symmetric(c, xs, ys) / self.scale

    def _symmetric(self, c: float, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def describe(self) -> dict:
        return {**super().describe(), 'alpha': self.alpha, 'scale': self.scale}


class StableCaseOneKernel(_SymmetrizedKernel):
    kind = 'stable-case1'

    def __init__(self, alpha: float, beta: float, lower: float, upper: float, scale: float = 1.0):
        if alpha > 1.0:
            singularity, exponent = Singularity.NONE, 0.0
        else:
            singularity, exponent = Singularity.POWER, 1.0 - alpha
        super().__init__(lower, upper, scale, diagonal_singularity=singularity, diagonal_exponent=exponent,
                         symmetric=bool(beta == 0.0), alpha=alpha)
        self.beta = beta
        self.constants = case_one_constants(alpha, beta)

    def _symmetric(self, c, x, y):
        return _case_one(self.constants, c, x, y)

    def describe(self) -> dict:
        mu, rho, C_alpha = self.constants
        return {**super().describe(), 'beta': self.beta, 'mu': mu, 'rho': rho, 'C_alpha': C_alpha}


class StableOneSidedKernel(_SymmetrizedKernel):
    kind = 'stable-onesided'

    def __init__(self, alpha: float, beta: float, lower: float, upper: float, scale: float = 1.0):
        stable_case(alpha, beta)
        super().__init__(lower, upper, scale, alpha=alpha)
        self.beta = beta

    def _symmetric(self, c, x, y):
        return stable_kernel_onesided(self.alpha, self.beta, c, x, y)

    def describe(self) -> dict:
        return {**super().describe(), 'beta': self.beta}


class CauchyKernel(_SymmetrizedKernel):
    kind = 'cauchy'

    def __init__(self, lower: float, upper: float, scale: float = KAC_SCALE):
        super().__init__(lower, upper, scale / KAC_SCALE, diagonal_singularity=Singularity.LOG,
                         symmetric=True, alpha=1.0)
        self.model_scale = scale

    def _symmetric(self, c, x, y):
        return cauchy_kernel(c, x, y)

    def describe(self) -> dict:
        return {**super().describe(), 'scale': self.model_scale}
