""" construction.py

    Quasi-potential of a general process on [-c, c], built from the
    operator S of the factored generator. With N1, N2 solving

        S N_k = x^{k-1},    r = int N1 != 0

    the kernel is

        Phi(x, y) = int_x^{c + (x - y - |x - y|)/2} q(t, t - x + y) dt
        q(x, y) = [N1(-y) N2(x) - N2(-y) N1(x)] / r

    with N_k extended by zero outside [-c, c]. N_k = w(x) phi_k(x) where
    w(x) = (c^2 - x^2)^e carries the end point behaviour and phi_k is
    expanded in Jacobi polynomials P^{(e,e)}; the collocation integrals
    use product rules for the kernel singularity at the collocation point.
"""

from dataclasses import dataclass, field
from logging import Logger
from typing import List, Optional, Tuple

import numpy as np

from scipy.special import eval_jacobi, roots_jacobi

from ..domain import SampledFunction
from ..errors import ConstructionError, MalformedInput, UnsupportedParameters
from ..kernels import ConvolutionKernel
from ..log import get_logger
from ..quadrature import Quadrature
from ..types import FloatArray, Real, Singularity
from .grid import GridBacked

MODES = 32
PANEL_NODES = 64
CELL_NODES = 8
END_NODES = 16
CONDITION_WARNING = 1e10
CONDITION_FAILURE = 1e14
R_TOLERANCE = 1e-10


def density_exponent(kernel: ConvolutionKernel) -> float:
    """ e with N_k ~ (c^2 - x^2)^e at the end points """
    if kernel.A_half > 0.0:
        return 0.0
    if kernel.singularity == Singularity.POWER:
        return 0.5 * (kernel.exponent - 1.0)
    if kernel.singularity == Singularity.LOG:
        return -0.5
    index = kernel.model.small_jump_index if kernel.model is not None else None
    if index is None or index <= 0.0:
        raise UnsupportedParameters(
                'the construction needs a Gaussian part or small jumps of positive index, '
                f'got index {index}')
    return 0.5 * (index - 2.0)


def diagonal_class(e: float) -> Tuple[str, float]:
    """ Singularity of Phi on the diagonal, from w(t)^2 ~ (c - t)^{2e} """
    s = 2.0 * e + 1.0
    if abs(s) < 1e-12:
        return Singularity.LOG, 0.0
    if s > 0.0:
        return Singularity.NONE, 0.0
    return Singularity.POWER, -s


class JacobiBasis:
    """ Orthonormal P^{(e,e)}(x/c) for the weight (c^2 - x^2)^e """

    def __init__(self, c: float, e: float, modes: int = MODES):
        self.c = c
        self.e = e
        self.modes = modes
        u, w = roots_jacobi(modes + 2, e, e)
        raw = self._raw(u)
        self.norms = np.sqrt(raw ** 2 @ w)
        self.moments = c ** (2.0 * e + 1.0) * (raw @ w) / self.norms

    def _raw(self, u: FloatArray) -> np.ndarray:
        return np.array([eval_jacobi(j, self.e, self.e, u) for j in range(self.modes)])

    def __call__(self, x: Real) -> np.ndarray:
        """ Matrix P[p, j] of basis function j at x[p] """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return (self._raw(np.clip(x / self.c, -1.0, 1.0)) / self.norms[:, None]).T

    def weight(self, x: Real) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) <= self.c if self.e == 0.0 else np.abs(x) < self.c
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(inside, np.maximum(self.c * self.c - x * x, 0.0) ** self.e, 0.0)

    def collocation_points(self) -> FloatArray:
        return self.c * roots_jacobi(self.modes, self.e, self.e)[0]


@dataclass
class ConstructionData:
    c: float
    e: float
    basis: JacobiBasis = field(repr=False)
    coefficients: np.ndarray = field(repr=False)
    """ Row k - 1 expands phi_k """
    r: float
    condition: float
    warnings: List[str] = field(default_factory=list)

    def smooth(self, k: int, x: Real) -> np.ndarray:
        return self.basis(x) @ self.coefficients[k - 1]

    def N(self, k: int, x: Real):
        x = np.asarray(x, dtype=float)
        values = self.basis.weight(x) * self.smooth(k, x).reshape(x.shape)
        return float(values) if values.ndim == 0 else values

    def sampled(self, k: int, grid: FloatArray) -> SampledFunction:
        return SampledFunction(grid, self.N(k, grid))

    def q(self, x: Real, y: Real):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        values = (self.N(1, -y) * self.N(2, x) - self.N(2, -y) * self.N(1, x)) / self.r
        return float(values) if np.ndim(values) == 0 else values

    def _smooth_product(self, t: np.ndarray, d: float, absolute: bool) -> np.ndarray:
        """ q(t, t + d) / (w(t) w(-t-d)), or the majorant integrand when `absolute` """
        mirror = -t - d
        a1, a2 = self.smooth(1, mirror), self.smooth(2, mirror)
        b1, b2 = self.smooth(1, t), self.smooth(2, t)
        if absolute:
            return (np.abs(a1 * b2) + np.abs(a2 * b1)) / abs(self.r)
        return (a1 * b2 - a2 * b1) / self.r

    def _end_factors(self, lo: float, hi: float, d: float):
        """
        The weights w(t) w(-t-d) are products of |t - z|^e over the zeros
        below; zeros at the ends of [lo, hi] become algebraic weights.
        """
        c, e = self.c, self.e
        zeros = (c, -c, -c - d, c - d)
        tol = 1e-12 * c
        at_lo = [abs(z - lo) <= tol for z in zeros]
        at_hi = [abs(z - hi) <= tol for z in zeros]
        inner = [z for z, l, h in zip(zeros, at_lo, at_hi) if not (l or h)]
        return e * sum(at_lo), e * sum(at_hi), inner

    def _cross_integral(self, lo: float, hi: float, d: float, absolute: bool) -> float:
        if not hi > lo:
            return 0.0
        e_lo, e_hi, inner = self._end_factors(lo, hi, d)
        if e_lo <= -1.0 or e_hi <= -1.0:
            return np.inf

        def g(t):
            value = float(self._smooth_product(np.array([t]), d, absolute)[0])
            for z in inner:
                value *= abs(t - z) ** self.e
            return value

        if e_lo == 0.0 and e_hi == 0.0:
            return Quadrature.adaptive(g, lo, hi, what='quasi-potential cross section')
        return Quadrature.adaptive(g, lo, hi, what='quasi-potential cross section', weight='alg', wvar=(e_lo, e_hi))

    def phi(self, x: float, y: float) -> float:
        """ Phi(x, y) by adaptive quadrature with algebraic end point weights """
        c = self.c
        if abs(x) > c or abs(y) > c:
            return 0.0
        d = y - x
        return self._cross_integral(x, c - max(d, 0.0), d, absolute=False)

    def majorant(self, d: float) -> float:
        """
        int [|N1(-t-d) N2(t)| + |N2(-t-d) N1(t)|] dt / |r|, a bound for
        |Phi(x, x + d)| uniform in x
        """
        c = self.c
        return self._cross_integral(max(-c, -c - d), min(c, c - d), d, absolute=True)


class GeneralConstruction:
    def __init__(self, logger: Logger, modes: int = MODES):
        self.logger = logger
        self.modes = modes

    def solve(self, kernel: ConvolutionKernel, c: float) -> ConstructionData:
        """ N1 and N2 by collocation at the Gauss-Jacobi points """
        if not c > 0.0:
            raise MalformedInput(f'half width c must be positive, got {c}')
        e = density_exponent(kernel)
        if e <= -1.0:
            raise UnsupportedParameters(f'end point exponent e={e} makes N_k non-integrable')

        basis = JacobiBasis(c, e, self.modes)
        points = basis.collocation_points()
        matrix = kernel.A_half * basis.weight(points)[:, None] * basis(points)
        if kernel.has_integral_part:
            for i, xi in enumerate(points):
                nodes, weights = self._row_rule(kernel, basis, xi)
                matrix[i] += weights @ basis(nodes)

        condition = float(np.linalg.cond(matrix))
        self.logger.info(f'collocation on [-{c}, {c}]: {self.modes} modes, e={e:.4f}, condition {condition:.3e}')
        if not np.isfinite(condition) or condition > CONDITION_FAILURE:
            raise ConstructionError(f'S is not invertible on [-{c}, {c}] (condition {condition:.3e})')

        rhs = np.stack((np.ones_like(points), points), axis=1)
        coefficients = np.linalg.solve(matrix, rhs).T

        warnings = []
        if condition > CONDITION_WARNING:
            warnings.append(f'ill-conditioned collocation system, condition {condition:.3e}')
            self.logger.warning(warnings[-1])

        r = float(basis.moments @ coefficients[0])
        scale = float(np.abs(basis.moments) @ np.abs(coefficients[0]))
        if not abs(r) > R_TOLERANCE * max(scale, 1e-300):
            raise ConstructionError(f'r = int N1 = {r:.3e} vanishes, the construction does not apply')
        self.logger.info(f'r = {r:.10g}')
        return ConstructionData(c, e, basis, coefficients, r, condition, warnings)

    @staticmethod
    def _row_rule(kernel: ConvolutionKernel, basis: JacobiBasis, xi: float) -> Tuple[FloatArray, FloatArray]:
        """
        Nodes and weights for int k(t - xi) w(t) p(t) dt, p a polynomial;
        panels split at xi and half way to each end point.
        """
        c, e = basis.c, basis.e
        m1, m2 = 0.5 * (xi - c), 0.5 * (xi + c)
        nodes, weights = [], []

        t, w = Quadrature.gauss_jacobi(-c, m1, PANEL_NODES, e, 'left')
        nodes.append(t)
        weights.append(w * (c - t) ** e * kernel.eval(t - xi))
        t, w = Quadrature.gauss_jacobi(m2, c, PANEL_NODES, e, 'right')
        nodes.append(t)
        weights.append(w * (c + t) ** e * kernel.eval(t - xi))

        for toward in (m1, m2):
            if kernel.singularity == Singularity.POWER:
                t, w, offsets = Quadrature.jacobi_about(xi, toward, PANEL_NODES, -kernel.exponent)
                w = w * np.abs(offsets) ** kernel.exponent
            else:
                t, w, offsets = Quadrature.graded_about(xi, toward, PANEL_NODES,
                                                        Quadrature.grading_power(kernel.singularity))
            nodes.append(t)
            weights.append(w * kernel.eval(offsets) * basis.weight(t))

        return np.concatenate(nodes), np.concatenate(weights)

    def phi_grid(self, data: ConstructionData, n: int) -> Tuple[FloatArray, np.ndarray]:
        """
        Phi on the uniform n-point grid. Along each diagonal y - x = k h
        the t-integrals are summed cell by cell from the far end; only the
        last cell meets a weight singularity and gets a Gauss-Jacobi rule.
        """
        c, e = data.c, data.e
        grid = np.linspace(-c, c, n)
        h = grid[1] - grid[0]

        # cell nodes are symmetric, so -t - kh of node q in cell m is node
        # CELL_NODES - 1 - q in cell n - 2 - m - k
        lo = grid[:-1]
        t, w = Quadrature.gauss_legendre(lo, lo + h, CELL_NODES)
        omega = data.basis.weight(t)
        phi1 = data.smooth(1, t.ravel()).reshape(t.shape)
        phi2 = data.smooth(2, t.ravel()).reshape(t.shape)

        values = np.zeros((n, n))
        for k in range(-(n - 2), n - 1):
            d = k * h
            first, last = max(0, -k), n - 2 - max(k, 0)
            cells = np.arange(first, last)
            mirror = n - 2 - cells - k
            integrand = omega[cells] * omega[mirror, ::-1] * (
                    phi1[mirror, ::-1] * phi2[cells] - phi2[mirror, ::-1] * phi1[cells]) / data.r
            pieces = np.append(np.sum(integrand * w[cells], axis=1), self._end_cell(data, grid[last + 1], h, d))

            tails = np.cumsum(pieces[::-1])[::-1]
            rows = np.arange(first, last + 1)
            values[rows, rows + k] = tails

        values[[0, -1], :] = 0.0
        values[:, [0, -1]] = 0.0
        return grid, values

    @staticmethod
    def _end_cell(data: ConstructionData, upper: float, h: float, d: float) -> float:
        e_lo, e_hi, inner = data._end_factors(upper - h, upper, d)
        if e_hi <= -1.0:
            return np.inf
        t, w = Quadrature.gauss_jacobi(upper - h, upper, END_NODES, e_hi, 'right')
        values = data._smooth_product(t, d, absolute=False)
        for z in inner:
            values = values * np.abs(t - z) ** data.e
        return float(np.sum(w * values))

    def build(self, kernel: ConvolutionKernel, c: float, n: int = 512) -> GridBacked:
        if n < 3:
            raise MalformedInput(f'the quasi-potential grid needs at least 3 points, got {n}')
        data = self.solve(kernel, c)
        grid, values = self.phi_grid(data, n)

        finite = values[np.isfinite(values)]
        peak = float(np.max(np.abs(finite))) if finite.size else 0.0
        samples = grid[1:-1][np.linspace(0, n - 3, min(8, n - 2)).astype(int)]
        residual = max(abs(data.phi(-c, y)) for y in samples) / max(peak, 1e-300)
        self.logger.info(f'quasi-potential grid n={n}: max Phi {peak:.6g}, boundary residual {residual:.3e}')

        singularity, exponent = diagonal_class(data.e)
        return GridBacked(grid, values, singularity, exponent, conditioning=data.condition,
                          boundary_residual=residual, construction=data,
                          symmetric=kernel.symmetric, warnings=list(data.warnings))


def general_construction(kernel: ConvolutionKernel, c: float, n: int = 512,
                         logger: Optional[Logger] = None) -> GridBacked:
    return GeneralConstruction(logger or get_logger('quasipotential')).build(kernel, c, n)
