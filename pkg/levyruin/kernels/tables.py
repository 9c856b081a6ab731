""" tables.py

    Tail integrals of a Levy density tabulated on a logarithmic grid, one
    table per half-line. With u = |y| and the density taken on the side of
    y:

        T0(u) = int_u^inf nu'(t) dt
        T1(u) = int_u^inf t nu'(t) dt
        U1(u) = int_0^u t nu'(t) dt

    The fully compensated kernel is T1 - u T0 and the uncompensated one is
    -u T0 - U1. Each table is filled once by cumulative quadrature and then
    interpolated in log-log coordinates, so kernel evaluation stays
    vectorised.
"""

from dataclasses import dataclass
from logging import Logger
from typing import Callable

import numpy as np

from scipy.interpolate import PchipInterpolator

from ..quadrature import Quadrature
from ..types import FloatArray

TABLE_MIN = 1e-8
TABLE_MAX = 1e6
POINTS_PER_DECADE = 40
TINY = 1e-300


@dataclass
class TailTable:
    u: FloatArray
    values: FloatArray
    sign: float
    log_singular: bool = False
    """ Extrapolate linearly in log u below the table instead of as a power """

    def __post_init__(self):
        magnitude = np.maximum(np.abs(self.values), TINY)
        self._log_u = np.log(self.u)
        self._interp = PchipInterpolator(self._log_u, np.log(magnitude), extrapolate=False)

    def __call__(self, u: FloatArray) -> FloatArray:
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        log_u = np.log(np.maximum(u, TINY))

        inside = (u >= self.u[0]) & (u <= self.u[-1])
        out[inside] = self.sign * np.exp(self._interp(log_u[inside]))

        below = (u < self.u[0]) & (u > 0.0)
        if np.any(below):
            if self.log_singular:
                slope = (self.values[1] - self.values[0]) / (self._log_u[1] - self._log_u[0])
                out[below] = self.values[0] + slope * (log_u[below] - self._log_u[0])
            else:
                magnitude = np.maximum(np.abs(self.values[:2]), TINY)
                slope = (np.log(magnitude[1]) - np.log(magnitude[0])) / (self._log_u[1] - self._log_u[0])
                out[below] = self.sign * magnitude[0] * np.exp(slope * (log_u[below] - self._log_u[0]))

        # past the table the last value is kept: compensated tails are already
        # negligible there, uncompensated ones have reached their plateau
        out[u > self.u[-1]] = self.values[-1]
        return out


def table_extent(density: Callable[[float], float], side: float) -> float:
    """ Radius past which nu' (times u^3) is negligible on one half-line """
    reference = abs(density(side * 1.0)) + TINY
    u = 1.0
    while u < TABLE_MAX:
        if abs(density(side * u)) * u ** 3 < 1e-18 * reference:
            return u
        u *= 2.0
    return TABLE_MAX


def tail_tables(density: Callable[[float], float], side: float, compensated: bool, logger: Logger):
    """
    (u, T0, T1) on one half-line when `compensated`, else (u, T0, U1).
    The caller has already checked that the moment involved is finite.
    """
    top = table_extent(density, side)
    decades = np.log10(top / TABLE_MIN)
    u = np.logspace(np.log10(TABLE_MIN), np.log10(top), int(np.ceil(decades * POINTS_PER_DECADE)) + 1)

    def nu(t, power=0):
        return t ** power * float(density(side * t))

    pieces0 = np.array([Quadrature.adaptive(nu, lo, hi, what='tail mass table')
                        for lo, hi in zip(u[:-1], u[1:])])
    pieces1 = np.array([Quadrature.adaptive(nu, lo, hi, what='first moment table', args=(1,))
                        for lo, hi in zip(u[:-1], u[1:])])

    beyond0 = Quadrature.adaptive(nu, u[-1], np.inf, what='tail mass beyond table')
    T0 = np.concatenate((np.cumsum(pieces0[::-1])[::-1], [0.0])) + beyond0

    if compensated:
        beyond1 = Quadrature.adaptive(nu, u[-1], np.inf, what='first tail moment beyond table', args=(1,))
        moment = np.concatenate((np.cumsum(pieces1[::-1])[::-1], [0.0])) + beyond1
    else:
        below1 = Quadrature.adaptive(nu, 0.0, u[0], what='first moment below table', args=(1,))
        moment = np.concatenate(([0.0], np.cumsum(pieces1))) + below1

    logger.debug(f'tail table on side {side:+.0f}: {u.size} points up to u = {top:.3g}')
    return u, T0, moment


def kernel_table(density: Callable[[float], float], side: float, compensated: bool, log_singular: bool,
                 logger: Logger) -> TailTable:
    """ k on one half-line: T1 - u T0 when `compensated`, else -u T0 - U1 """
    u, T0, moment = tail_tables(density, side, compensated, logger)
    if compensated:
        return TailTable(u, moment - u * T0, 1.0, log_singular)
    return TailTable(u, -u * T0 - moment, -1.0, log_singular)
