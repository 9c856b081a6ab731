""" survival.py

    Confinement probabilities from a spectral decomposition:

        p(t, D) = sum_k e^{-t / lambda_k} g_k(0) int_D h_k
        p(x0, D1, t, D) = sum_k e^{-t / lambda_k} g_k(x0) int_D1 h_k

    the long-time leading term c1 e^{-t / lambda1}, and the Laplace
    transform of the series.
"""

from logging import Logger
from typing import List, Optional, Tuple

import numpy as np

from pydantic import BaseModel

from ..domain import Interval
from ..errors import DomainError, MultiplicityError
from ..log import get_logger
from ..types import Real, SurvivalMethod
from .eigen import NEGLIGIBLE_MODULUS, SpectralDecomposition

RATIO_CUTOFF = 1e-3
MAX_TERMS = 50
TRUNCATION_WARNING = 1e-2
GAP_TOLERANCE = 1e-8


class SurvivalEstimate(BaseModel):
    times: List[float]
    values: List[float]
    method: str
    lambda1: float
    c1: float
    truncation: List[float] = []
    """ Bound on the neglected modes at each time, series only """
    warnings: List[str] = []


def default_terms(dec: SpectralDecomposition) -> int:
    """ Modes of the full spectrum with |lambda_k| / lambda1 above the cut-off, at most MAX_TERMS """
    ratio = np.abs(dec.spectrum) / abs(dec.spectrum[0])
    return int(max(1, min(MAX_TERMS, np.count_nonzero(ratio > RATIO_CUTOFF))))


def _rates(values: np.ndarray) -> np.ndarray:
    """ Re(1/lambda); negligible or left half plane modes get rate +inf """
    out = np.full(values.shape, np.inf)
    usable = np.abs(values) > 0.0
    out[usable] = (1.0 / values[usable]).real
    return np.where(out > 0.0, out, np.inf)


def _leading(dec: SpectralDecomposition) -> Tuple[float, float]:
    return dec.lambda1, float(dec.coefficients[0].real)


def _usable(dec: SpectralDecomposition) -> np.ndarray:
    values = dec.spectrum
    keep = np.abs(values) > NEGLIGIBLE_MODULUS * abs(values[0])
    return keep & ((1.0 / np.where(keep, values, 1.0)).real > 0.0)


def _probabilities(values: np.ndarray, warnings: List[str], logger: Logger) -> np.ndarray:
    """ Clip to [0, 1]; a truncated series overshoots at short times """
    clipped = np.clip(values, 0.0, 1.0)
    if np.any(clipped != values):
        worst = float(np.max(np.abs(clipped - values)))
        warnings.append(f'series values clipped to [0, 1], largest overshoot {worst:.3g}')
        logger.warning(warnings[-1])
    return clipped


def survival_series(dec: SpectralDecomposition, t: Real, k: Optional[int] = None,
                    logger: Optional[Logger] = None) -> SurvivalEstimate:
    logger = logger or get_logger('spectral')
    times = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(times <= 0.0):
        raise DomainError('survival times must be positive')
    if not np.all(np.isfinite(dec.origin)):
        raise DomainError('the survival series needs the origin inside the domain')
    k = default_terms(dec) if k is None else max(1, min(k, dec.spectrum.size))

    usable = _usable(dec)
    rates = _rates(dec.spectrum)
    coefficients = np.where(usable, dec.coefficients, 0.0)
    decay = np.exp(-np.outer(times, np.where(usable, rates, np.inf)[:k]))
    values = (decay @ coefficients[:k]).real
    tail = np.exp(-np.outer(times, np.where(usable, rates, np.inf)[k:])) @ np.abs(coefficients[k:])

    lambda1, c1 = _leading(dec)
    warnings = []
    if np.any(tail > TRUNCATION_WARNING):
        warnings.append(f'truncation bound {float(np.max(tail)):.3g} exceeds {TRUNCATION_WARNING}: '
                        f't is too small for {k} terms')
        logger.warning(warnings[-1])
    skipped = int(np.count_nonzero(~usable))
    if skipped:
        logger.debug(f'{skipped} negligible or non-decaying modes left out of the series')
    values = _probabilities(values, warnings, logger)

    return SurvivalEstimate(times=times.tolist(), values=values.tolist(), method=SurvivalMethod.SERIES,
                            lambda1=lambda1, c1=c1, truncation=tail.tolist(), warnings=warnings)


def leading_asymptotics(dec: SpectralDecomposition) -> Tuple[float, float]:
    """ (lambda1, c1) with p(t, D) = e^{-t / lambda1} [c1 + o(1)] """
    values = dec.spectrum
    if values.size > 1 and abs(values[1]) >= (1.0 - GAP_TOLERANCE) * abs(values[0]):
        raise MultiplicityError(
                f'lambda1={values[0]:.8g} is not simple (|lambda2|={abs(values[1]):.8g}): '
                'the leading asymptotics need a rank one leading eigenvalue')
    return _leading(dec)


def survival_asymptotic(dec: SpectralDecomposition, t: Real) -> SurvivalEstimate:
    times = np.atleast_1d(np.asarray(t, dtype=float))
    lambda1, c1 = leading_asymptotics(dec)
    return SurvivalEstimate(times=times.tolist(), values=(c1 * np.exp(-times / lambda1)).tolist(),
                            method=SurvivalMethod.ASYMPTOTIC, lambda1=lambda1, c1=c1)


def _check_sub(dec: SpectralDecomposition, x0: float, sub: Interval):
    if sub.lower < dec.system.lower - 1e-12 or sub.upper > dec.system.upper + 1e-12:
        raise DomainError(f'[{sub.lower}, {sub.upper}] is not inside the domain')
    if not sub.contains(x0):
        raise DomainError(f'x0={x0} lies outside [{sub.lower}, {sub.upper}]')


def conditional_asymptotics(dec: SpectralDecomposition, x0: float, sub: Interval) -> float:
    """ g1(x0) int_{D1} h1, the coefficient of e^{-t / lambda1} in p(x0, D1, t, D) """
    _check_sub(dec, x0, sub)
    g1 = complex(dec.g(0, [x0])[0])
    return float((g1 * dec.h_integral(0, sub.lower, sub.upper)).real)


def conditional_series(dec: SpectralDecomposition, x0: float, sub: Interval, t: Real) -> SurvivalEstimate:
    _check_sub(dec, x0, sub)
    times = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(times <= 0.0):
        raise DomainError('survival times must be positive')

    system = dec.system
    start = system.interpolation_rows([x0])[0] @ dec.right.T
    mass = dec.left @ system.integration_row(sub.lower, sub.upper)
    usable = _usable(dec)[:dec.k]
    rates = np.where(usable, _rates(dec.eigenvalues), np.inf)
    values = (np.exp(-np.outer(times, rates)) @ np.where(usable, start * mass, 0.0)).real

    lambda1 = dec.lambda1
    return SurvivalEstimate(times=times.tolist(), values=values.tolist(), method=SurvivalMethod.SERIES,
                            lambda1=lambda1, c1=float((start[0] * mass[0]).real))


def laplace_transform(dec: SpectralDecomposition, s: float) -> float:
    """ int_0^inf e^{-st} p(t, D) dt = sum_k c_k lambda_k / (1 + s lambda_k) """
    if s < 0.0:
        raise DomainError(f'the Laplace variable must be non-negative, got {s}')
    usable = _usable(dec)
    values = np.where(usable, dec.spectrum, 0.0)
    return float(np.sum(np.where(usable, dec.coefficients, 0.0) * values / (1.0 + s * values)).real)
