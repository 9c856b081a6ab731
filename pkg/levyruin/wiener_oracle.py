""" wiener_oracle.py

    Exact confinement probabilities of the standard Wiener process started
    at 0 in [-b, a]: the eigenfunction series, its image resummation, the
    long-time and large-b asymptotics, and the first hitting time law.

    With s = sqrt(t) every Gaussian tail is written through erfc, and
    sqrt(2/pi) int_p^q e^{-u^2/2} du = erfc(p/sqrt2) - erfc(q/sqrt2).
"""

import math

from typing import Callable, NamedTuple, Optional

import numpy as np

from scipy.special import erf, erfc

from .errors import MalformedInput
from .log import get_logger

SERIES_THRESHOLD = 0.2
""" t / (a + b)^2 from which the eigenfunction series is preferred """

MAX_TERMS = 1_000_000
EPS = np.finfo(float).eps


class OracleValue(NamedTuple):
    value: float
    terms: int
    best_effort: bool


class WienerEigen(NamedTuple):
    mu: float
    g: Callable[[float], float]


def _check(**params):
    for name, value in params.items():
        if not (np.isfinite(value) and value > 0.0):
            raise MalformedInput(f'{name} must be positive and finite, got {value}')


def _tail(x: float) -> float:
    """ sqrt(2/pi) int_x^inf e^{-u^2/2} du """
    return float(erfc(x / math.sqrt(2.0)))


def p2_series_value(a: float, b: float, t: float, tol: float = 1e-14) -> OracleValue:
    _check(a=a, b=b, t=t)
    L = a + b
    rate = 0.5 * t * (math.pi / L) ** 2
    alternating = a == b
    value = 0.0
    for m in range(MAX_TERMS):
        n = 2 * m + 1
        bound = 4.0 / (n * math.pi) * math.exp(-rate * n * n)
        value += bound * math.sin(n * b * math.pi / L)

        # consecutive exponentials shrink by at least `ratio`
        ratio = math.exp(-rate * 8.0 * (m + 1))
        remainder = bound * ratio if alternating else bound * ratio / max(1.0 - ratio, EPS)
        if remainder < tol:
            break
    else:
        get_logger('wiener_oracle').warning(f'p2 series not converged after {MAX_TERMS} terms at t={t}')
        return OracleValue(float(np.clip(value, 0.0, 1.0)), MAX_TERMS, True)

    best_effort = tol < 4.0 * EPS * max(abs(value), EPS)
    if best_effort:
        get_logger('wiener_oracle').warning(f'tol={tol:g} is below double precision for p2={value:.3g}')
    return OracleValue(float(np.clip(value, 0.0, 1.0)), m + 1, best_effort)


def p2_series(a: float, b: float, t: float, tol: float = 1e-14) -> float:
    """
    sum_m 4 / ((2m+1) pi) sin((2m+1) b pi / (a+b)) e^{-t ((2m+1) pi / (a+b))^2 / 2}
    """
    return p2_series_value(a, b, t, tol).value


def first_hitting_survival(a: float, t: float) -> float:
    """ P(T_a > t) = 1 - sqrt(2/pi) int_{a/sqrt t}^inf e^{-u^2/2} du """
    _check(a=a, t=t)
    return float(erf(a / math.sqrt(2.0 * t)))


def p2_resummed_value(a: float, b: float, t: float, tol: float = 1e-15) -> OracleValue:
    _check(a=a, b=b, t=t)
    L = a + b
    s = math.sqrt(t)
    correction, quiet = 0.0, 0
    for m in range(1, MAX_TERMS):
        A, B = (2 * m * L + a) / s, (2 * m * L - a) / s
        C, D = (m * L + a) / s, (m * L - a) / s
        outer = _tail(B) - _tail(A)
        inner = _tail(D) - _tail(C)
        correction += 2.0 * outer - inner
        quiet = quiet + 1 if max(outer, inner) < 0.1 * tol else 0
        if quiet == 2:
            break
    else:
        return OracleValue(float(np.clip(first_hitting_survival(a, t) + correction, 0.0, 1.0)), MAX_TERMS, True)
    return OracleValue(float(np.clip(first_hitting_survival(a, t) + correction, 0.0, 1.0)), m, False)


def p2_resummed(a: float, b: float, t: float, tol: float = 1e-15) -> float:
    """
    1 - sqrt(2/pi) int_{a/sqrt t}^inf e^{-u^2/2} du + q2, where
    q2 = sqrt(2/pi) sum_{m>=1} [2 int_{B_m/sqrt t}^{A_m/sqrt t} - int_{D_m/sqrt t}^{C_m/sqrt t}] e^{-u^2/2} du
    with A_m = 2m(a+b) + a, B_m = 2m(a+b) - a, C_m = m(a+b) + a, D_m = m(a+b) - a.
    """
    return p2_resummed_value(a, b, t, tol).value


def p2_large_b(a: float, b: float, t: float) -> float:
    """ First image correction only, exact as b -> inf """
    _check(a=a, b=b, t=t)
    s = math.sqrt(t)
    return first_hitting_survival(a, t) - (_tail(b / s) - _tail((b + 2.0 * a) / s))


def p2_asymptotic(a: float, b: float, t: float) -> float:
    """ (4/pi) sin(a pi / (a+b)) e^{-t pi^2 / (2 (a+b)^2)}, the t -> inf leading term """
    _check(a=a, b=b, t=t)
    L = a + b
    return 4.0 / math.pi * math.sin(a * math.pi / L) * math.exp(-t * math.pi ** 2 / (2.0 * L * L))


def p2(a: float, b: float, t: float, tol: float = 1e-14, threshold: Optional[float] = None) -> float:
    """ Series for t / (a+b)^2 at or above the threshold, image resummation below """
    _check(a=a, b=b, t=t)
    threshold = SERIES_THRESHOLD if threshold is None else threshold
    if t / (a + b) ** 2 >= threshold:
        return p2_series(a, b, t, tol)
    return p2_resummed(a, b, t, tol)


def wiener_eigendata(n: int, a: float, b: float) -> WienerEigen:
    """ mu_n = (n pi / (a+b))^2 / 2, g_n(x) = sqrt(2 / (a+b)) sin(n pi (x + b) / (a+b)) """
    if n < 1:
        raise MalformedInput(f'eigen index n must be at least 1, got {n}')
    _check(a=a, b=b)
    L = a + b
    k = n * math.pi / L
    norm = math.sqrt(2.0 / L)

    def g(x):
        return norm * np.sin(k * (np.asarray(x, dtype=float) + b))

    return WienerEigen(0.5 * k * k, g)
