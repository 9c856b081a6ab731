""" nystrom.py

    Nystrom discretization of B f(x) = int Phi(x, y) f(y) dy on the
    interval of a quasi-potential kernel. Composite Gauss-Legendre panels,
    graded towards the end points and split at the origin; on the panel of
    each node and its two neighbours the weights are replaced by product
    integration moments int Phi(x_i, y) l_j(y) dy of the panel's Lagrange
    basis, computed with rules graded towards the diagonal.
"""

from dataclasses import dataclass, field
from logging import Logger
from typing import Optional

import numpy as np

from ..errors import MalformedInput, NumericalFailure
from ..log import get_logger
from ..quadrature import Quadrature
from ..quasipotential import QuasiPotentialKernel
from ..types import FloatArray, Real

ORDER = 8
SINGULAR_NODES = 24
MIN_NODES = 16


@dataclass
class NystromSystem:
    nodes: FloatArray
    weights: FloatArray
    matrix: np.ndarray
    """ B[i, j] with (B f)(x_i) = sum_j B[i, j] f(x_j) """
    breakpoints: FloatArray
    kernel: QuasiPotentialKernel = field(repr=False)
    symmetric: bool = False
    order: int = ORDER

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def lower(self) -> float:
        return float(self.breakpoints[0])

    @property
    def upper(self) -> float:
        return float(self.breakpoints[-1])

    def panel_nodes(self, p: int) -> FloatArray:
        return self.nodes[p * self.order:(p + 1) * self.order]

    def interpolation_rows(self, x: Real) -> np.ndarray:
        """
        R[p, j] such that f(x[p]) = sum_j R[p, j] f(x_j) for the panelwise
        polynomial interpolant; interior breakpoints average both sides.
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any((x < self.lower) | (x > self.upper)):
            raise MalformedInput(f'interpolation point outside [{self.lower}, {self.upper}]')
        panels = self.breakpoints.size - 1
        rows = np.zeros((x.size, self.n))
        for index, point in enumerate(x):
            p = int(np.clip(np.searchsorted(self.breakpoints, point, side='right') - 1, 0, panels - 1))
            sides = [p]
            if point == self.breakpoints[p] and p > 0:
                sides.append(p - 1)
            for q in sides:
                basis = Quadrature.lagrange_basis(self.panel_nodes(q), [point])[0]
                rows[index, q * self.order:(q + 1) * self.order] += basis / len(sides)
        return rows

    def interpolate(self, values: np.ndarray, x: Real) -> np.ndarray:
        return self.interpolation_rows(x) @ values

    def integration_row(self, lo: Optional[float] = None, hi: Optional[float] = None) -> FloatArray:
        """ r with int_lo^hi f = r . f(nodes), exact for the panelwise interpolant """
        lo = self.lower if lo is None else max(lo, self.lower)
        hi = self.upper if hi is None else min(hi, self.upper)
        if lo == self.lower and hi == self.upper:
            return self.weights.copy()
        row = np.zeros(self.n)
        for p in range(self.breakpoints.size - 1):
            a, b = max(self.breakpoints[p], lo), min(self.breakpoints[p + 1], hi)
            if b <= a:
                continue
            t, w = Quadrature.gauss_legendre(a, b, self.order)
            row[p * self.order:(p + 1) * self.order] += w @ Quadrature.lagrange_basis(self.panel_nodes(p), t)
        return row

    def integrate(self, values: np.ndarray, lo: Optional[float] = None, hi: Optional[float] = None):
        return self.integration_row(lo, hi) @ values

    def origin_row(self) -> FloatArray:
        """ Phi(0, x_j) """
        return np.asarray(self.kernel(np.zeros(self.n), self.nodes), dtype=float)


class NystromAssembler:
    def __init__(self, logger: Logger, order: int = ORDER, singular_nodes: int = SINGULAR_NODES):
        self.logger = logger
        self.order = order
        self.singular_nodes = singular_nodes

    def breakpoints(self, kernel: QuasiPotentialKernel, n: int) -> FloatArray:
        lower, upper = kernel.lower, kernel.upper
        if lower < 0.0 < upper:
            half = max(1, int(np.ceil(n / (2 * self.order))))
            left = Quadrature.graded_breakpoints(lower, 0.0, half)
            right = Quadrature.graded_breakpoints(0.0, upper, half)
            return np.concatenate((left, right[1:]))
        return Quadrature.graded_breakpoints(lower, upper, max(2, int(np.ceil(n / self.order))))

    def assemble(self, kernel: QuasiPotentialKernel, n: int) -> NystromSystem:
        if n < MIN_NODES:
            raise MalformedInput(f'the Nystrom system needs at least {MIN_NODES} nodes, got {n}')
        breaks = self.breakpoints(kernel, n)
        nodes, weights = Quadrature.gauss_legendre(breaks[:-1], breaks[1:], self.order)
        nodes, weights = nodes.ravel(), weights.ravel()
        size = nodes.size
        if size != n:
            self.logger.info(f'{n} nodes requested, using {size} ({breaks.size - 1} panels of {self.order})')

        with np.errstate(divide='ignore', invalid='ignore'):
            matrix = np.asarray(kernel(nodes[:, None], nodes[None, :]), dtype=float) * weights[None, :]

        power = Quadrature.grading_power(kernel.diagonal_singularity, kernel.diagonal_exponent)
        panels = breaks.size - 1
        for i, xi in enumerate(nodes):
            p = i // self.order
            for q in range(max(p - 1, 0), min(p + 2, panels)):
                matrix[i, q * self.order:(q + 1) * self.order] = self._moments(
                        kernel, xi, breaks[q], breaks[q + 1], nodes[q * self.order:(q + 1) * self.order], q - p, power)

        bad = ~np.isfinite(matrix)
        if np.any(bad):
            i, j = np.argwhere(bad)[0]
            raise NumericalFailure(f'kernel value not finite at x={nodes[i]:.6g}, y={nodes[j]:.6g}')

        symmetric = bool(kernel.symmetric)
        if symmetric:
            root = np.sqrt(weights)
            similar = root[:, None] * matrix / root[None, :]
            similar = 0.5 * (similar + similar.T)
            matrix = similar / root[:, None] * root[None, :]

        self.logger.info(f'Nystrom system for {kernel.kind} on [{kernel.lower}, {kernel.upper}]: '
                         f'{size} nodes, {panels} panels, symmetric={symmetric}')
        return NystromSystem(nodes, weights, matrix, breaks, kernel, symmetric, self.order)

    def _moments(self, kernel: QuasiPotentialKernel, xi: float, lo: float, hi: float, panel: FloatArray,
                 offset: int, power: int) -> FloatArray:
        """ int_lo^hi Phi(xi, y) l_j(y) dy for the Lagrange basis through `panel` """
        if offset == 0:
            pieces = [Quadrature.graded_about(xi, lo, self.singular_nodes, power),
                      Quadrature.graded_about(xi, hi, self.singular_nodes, power)]
        elif offset < 0:
            pieces = [Quadrature.graded(lo, hi, self.singular_nodes, 'right', power)]
        else:
            pieces = [Quadrature.graded(lo, hi, self.singular_nodes, 'left', power)]

        t = np.concatenate([piece[0] for piece in pieces])
        w = np.concatenate([piece[1] for piece in pieces])
        values = np.asarray(kernel(np.full_like(t, xi), t), dtype=float)
        return (w * values) @ Quadrature.lagrange_basis(panel, t)


def assemble(kernel: QuasiPotentialKernel, n: int, logger: Optional[Logger] = None) -> NystromSystem:
    return NystromAssembler(logger or get_logger('spectral')).assemble(kernel, n)
