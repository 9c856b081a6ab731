""" quadrature.py

    Quadrature rules shared by the kernel, quasi-potential and spectral
    layers: composite Gauss-Legendre, Gauss-Jacobi for algebraic end point
    singularities, graded rules for log and cusp singularities, barycentric
    Lagrange bases for product integration, and a checked wrapper around
    QUADPACK.
"""

import warnings

from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from scipy.integrate import quad, IntegrationWarning
from scipy.special import roots_legendre, roots_jacobi

from .consts import QUAD_EPSABS, QUAD_EPSREL, DEFAULT_QUAD_LIMIT
from .errors import QuadratureError
from .types import FloatArray, Singularity

Rule = Tuple[FloatArray, FloatArray]
""" (nodes, weights) """

OffsetRule = Tuple[FloatArray, FloatArray, FloatArray]
""" (nodes, weights, offsets from the singular point) """


@lru_cache(maxsize=None)
def _legendre(n: int) -> Rule:
    return roots_legendre(n)


@lru_cache(maxsize=None)
def _jacobi(n: int, alpha: float, beta: float) -> Rule:
    return roots_jacobi(n, alpha, beta)


def _off_point(point: FloatArray, offsets: FloatArray) -> FloatArray:
    """ point + offsets; a node that rounds onto the point moves one float toward its panel """
    nodes = point + offsets
    stuck = nodes == point
    if np.any(stuck):
        nodes = np.where(stuck, np.nextafter(point, np.copysign(np.inf, offsets)), nodes)
    return nodes


class Quadrature:
    limit: int = DEFAULT_QUAD_LIMIT

    @staticmethod
    def gauss_legendre(lo, hi, n: int = 8) -> Rule:
        """
        Gauss-Legendre rule on [lo, hi]. `lo` and `hi` may be arrays of
        equal shape, in which case nodes and weights gain a trailing axis.
        """
        x, w = _legendre(n)
        lo = np.asarray(lo, dtype=float)[..., None]
        hi = np.asarray(hi, dtype=float)[..., None]
        half = 0.5 * (hi - lo)
        return 0.5 * (hi + lo) + half * x, half * w

    @staticmethod
    def gauss_jacobi(lo, hi, n: int, exponent: float, end: str = 'left') -> Rule:
        """
        Rule for integral of (t - lo)^e g(t) ('left') or (hi - t)^e g(t)
        ('right') over [lo, hi]; the singular weight is folded into the
        returned weights so only g is sampled.
        """
        point, toward = (lo, hi) if end == 'left' else (hi, lo)
        nodes, weights, _ = Quadrature.jacobi_about(point, toward, n, exponent)
        return nodes, weights

    @staticmethod
    def jacobi_about(point, toward, n: int, exponent: float) -> OffsetRule:
        """ Gauss-Jacobi on the panel from `point` to `toward` with |t - point|^e folded into the weights """
        u, w = _jacobi(n, 0.0, float(exponent))
        point = np.asarray(point, dtype=float)[..., None]
        span = np.asarray(toward, dtype=float)[..., None] - point
        offsets = 0.5 * span * (1.0 + u)
        weights = w * (0.5 * np.abs(span)) ** (exponent + 1.0)
        return _off_point(point, offsets), weights, offsets

    @staticmethod
    def graded(lo, hi, n: int = 24, end: str = 'left', power: int = 4) -> Rule:
        """
        Gauss-Legendre in v with t = lo + L v^p (or hi - L v^p), clustering
        nodes at the singular end. Absorbs log singularities and weak
        algebraic ones.
        """
        point, toward = (lo, hi) if end == 'left' else (hi, lo)
        nodes, weights, _ = Quadrature.graded_about(point, toward, n, power)
        return nodes, weights

    @staticmethod
    def graded_about(point, toward, n: int = 24, power: int = 4) -> OffsetRule:
        """
        Graded rule on the panel from the singular `point` to `toward`.
        The third array holds the signed offsets t - point straight from
        the grading map. Near `point` they are far below the spacing of
        floats around it, so singular factors must be evaluated on the
        offsets and not on differences of nodes.
        """
        v, w = _legendre(n)
        v = 0.5 * (v + 1.0)
        point = np.asarray(point, dtype=float)[..., None]
        span = np.asarray(toward, dtype=float)[..., None] - point
        offsets = span * v ** power
        weights = np.abs(span) * 0.5 * w * power * v ** (power - 1)
        return _off_point(point, offsets), weights, offsets

    @staticmethod
    def grading_power(singularity: str, exponent: float = 0.0) -> int:
        """ Grading power so that |t|^{-sigma} times the Jacobian is at least cubic """
        if singularity == Singularity.POWER:
            return int(max(4, np.ceil(4.0 / max(1.0 - exponent, 0.05))))
        return 4

    @staticmethod
    def graded_breakpoints(lo: float, hi: float, panels: int) -> FloatArray:
        s = np.linspace(0.0, 1.0, panels + 1)
        points = lo + (hi - lo) * 0.5 * (1.0 - np.cos(np.pi * s))
        points[0], points[-1] = lo, hi
        return points

    @staticmethod
    def lagrange_basis(nodes: FloatArray, points: FloatArray) -> FloatArray:
        """
        Matrix L[p, j] = l_j(points[p]) of the Lagrange basis through
        `nodes`, evaluated with the barycentric formula.
        """
        nodes = np.asarray(nodes, dtype=float)
        points = np.atleast_1d(np.asarray(points, dtype=float))
        diff = nodes[:, None] - nodes[None, :]
        np.fill_diagonal(diff, 1.0)
        bary = 1.0 / np.prod(diff, axis=1)

        delta = points[:, None] - nodes[None, :]
        exact = delta == 0.0
        delta[exact] = 1.0
        terms = bary[None, :] / delta
        basis = terms / np.sum(terms, axis=1, keepdims=True)

        hit = np.any(exact, axis=1)
        if np.any(hit):
            basis[hit] = exact[hit].astype(float)
        return basis

    @staticmethod
    def adaptive(fn: Callable[[float], float], lo: float, hi: float, what: str = 'integral',
                 epsabs: float = QUAD_EPSABS, epsrel: float = QUAD_EPSREL, **kwargs) -> float:
        """
        QUADPACK integration. A non-convergence warning turns into a
        QuadratureError carrying the partial estimate unless the reported
        error is still small.
        """
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always', IntegrationWarning)
            result = quad(fn, lo, hi, epsabs=epsabs, epsrel=epsrel, limit=Quadrature.limit, **kwargs)

        value, abserr = float(result[0]), float(result[1])
        tolerance = max(1e-8, 1e-6 * abs(value))
        if any(issubclass(w.category, IntegrationWarning) for w in caught) and abserr > tolerance:
            raise QuadratureError(f'{what} did not converge on [{lo}, {hi}]', partial=value, abserr=abserr)
        if not np.isfinite(value):
            raise QuadratureError(f'{what} is not finite on [{lo}, {hi}]', partial=value, abserr=abserr)
        return value
