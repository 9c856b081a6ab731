""" eigen.py

    Spectral decomposition of a Nystrom system. Eigenvalues are sorted by
    descending modulus; right eigenfunctions g_k and left eigenfunctions
    h_k are normalised against each other in the bilinear pairing

        (g_k, h_l) = int g_k(x) h_l(x) dx = delta_kl

    so that 1 = sum_k (int h_k) g_k. Self-adjoint systems are solved in
    the symmetric similarity form and have h_k = g_k.
"""

from dataclasses import dataclass, field
from logging import Logger
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from ..domain import SampledFunction
from ..errors import NormalizationBreakdown, UnsupportedParameters
from ..log import get_logger
from ..types import ComplexArray, FloatArray
from .nystrom import NystromSystem

NORMALIZATION_TOLERANCE = 1e-10
CLUSTER_TOLERANCE = 1e-8
REALNESS_TOLERANCE = 1e-10
NEGLIGIBLE_MODULUS = 1e-14


@dataclass
class SpectralDecomposition:
    eigenvalues: ComplexArray
    right: ComplexArray
    """ right[k] holds g_k at the nodes """
    left: ComplexArray
    """ left[k] holds h_k at the nodes """
    system: NystromSystem = field(repr=False)
    spectrum: ComplexArray = field(repr=False)
    """ every eigenvalue of the discrete system, sorted like `eigenvalues` """
    origin: ComplexArray = field(repr=False)
    """ g_k(0) for every mode of `spectrum` """
    integrals: ComplexArray = field(repr=False)
    """ int h_k for every mode of `spectrum` """
    defective: List[complex] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.eigenvalues.size

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[0].real)

    @property
    def coefficients(self) -> ComplexArray:
        """ c_k = g_k(0) int h_k for every mode of `spectrum` """
        return self.origin * self.integrals

    def g(self, index: int, x) -> np.ndarray:
        return self.system.interpolate(self.right[index], x)

    def h(self, index: int, x) -> np.ndarray:
        return self.system.interpolate(self.left[index], x)

    def h_integral(self, index: int, lo: Optional[float] = None, hi: Optional[float] = None) -> complex:
        return complex(self.system.integrate(self.left[index], lo, hi))

    def right_function(self, index: int) -> SampledFunction:
        values = self.right[index]
        if np.all(np.abs(values.imag) <= REALNESS_TOLERANCE * np.max(np.abs(values))):
            values = values.real
        return SampledFunction(self.system.nodes, values)

    def left_function(self, index: int) -> SampledFunction:
        values = self.left[index]
        if np.all(np.abs(values.imag) <= REALNESS_TOLERANCE * np.max(np.abs(values))):
            values = values.real
        return SampledFunction(self.system.nodes, values)

    def biorthogonality_residual(self, count: int = 10) -> float:
        """ max over k != l <= count of |(g_k, h_l)| """
        count = min(count, self.k)
        gram = (self.left[:count] * self.system.weights) @ self.right[:count].T
        return float(np.max(np.abs(gram - np.eye(count)))) if count else 0.0


class EigenSolver:
    def __init__(self, logger: Logger):
        self.logger = logger

    def solve(self, system: NystromSystem, k: int) -> SpectralDecomposition:
        if not 1 <= k <= system.n:
            raise UnsupportedParameters(f'k must lie in [1, {system.n}], got {k}')

        if system.symmetric:
            values, right, left = self._symmetric(system)
        else:
            values, right, left = self._general(system)

        order = np.argsort(-np.abs(values), kind='stable')
        values, right, left = values[order], right[order], left[order]

        warnings: List[str] = []
        defective = self._defective(values, right, k)
        for value in defective:
            warnings.append(f'eigenvalue {value:.6g} looks defective (index > 1)')
            self.logger.warning(warnings[-1])

        pairing = np.sum(left * right * system.weights, axis=1)
        scale = np.sqrt(np.sum(np.abs(left) ** 2 * system.weights, axis=1)
                        * np.sum(np.abs(right) ** 2 * system.weights, axis=1))
        broken = np.abs(pairing[:k]) < NORMALIZATION_TOLERANCE * scale[:k]
        if np.any(broken):
            index = int(np.argmax(broken))
            raise NormalizationBreakdown(f'(g_k, h_k) vanishes for eigenvalue {values[index]:.6g}')
        safe = np.where(np.abs(pairing) > 0.0, pairing, 1.0)
        left = left / safe[:, None]

        # sign fix: int g_1 > 0, the pairing is kept
        total = complex(system.weights @ right[0])
        if total != 0.0:
            phase = total / abs(total)
            right[0] = right[0] / phase
            left[0] = left[0] * phase

        if abs(values[0].imag) > REALNESS_TOLERANCE * abs(values[0]):
            warnings.append(f'leading eigenvalue {values[0]:.6g} is not real')
            self.logger.warning(warnings[-1])

        origin = system.interpolation_rows([0.0])[0] @ right.T if system.lower <= 0.0 <= system.upper \
            else np.full(values.size, np.nan + 0j)
        integrals = left @ system.weights

        self.logger.info(f'spectrum of {system.n}x{system.n} system: lambda1={values[0].real:.10g}, '
                         f'|lambda2|={abs(values[1]) if values.size > 1 else 0.0:.6g}')
        return SpectralDecomposition(values[:k], right[:k], left[:k], system, values, origin, integrals,
                                     defective, warnings)

    @staticmethod
    def _symmetric(system: NystromSystem) -> Tuple[ComplexArray, ComplexArray, ComplexArray]:
        root = np.sqrt(system.weights)
        similar = root[:, None] * system.matrix / root[None, :]
        values, vectors = scipy.linalg.eigh(similar)
        right = (vectors / root[:, None]).T.astype(complex)
        return values.astype(complex), right, right.copy()

    @staticmethod
    def _general(system: NystromSystem) -> Tuple[ComplexArray, ComplexArray, ComplexArray]:
        # u^T B = lambda u^T with u = conj(vl); the left eigenfunction is u / w
        values, vl, vr = scipy.linalg.eig(system.matrix, left=True, right=True)
        right = vr.T.astype(complex)
        left = (np.conj(vl) / system.weights[:, None]).T
        norms = np.sqrt(np.sum(np.abs(right) ** 2 * system.weights, axis=1))
        return values.astype(complex), right / norms[:, None], left

    @staticmethod
    def _defective(values: ComplexArray, right: ComplexArray, k: int) -> List[complex]:
        """ Leading eigenvalues repeated within tolerance whose eigenvectors are nearly parallel """
        found = []
        scale = abs(values[0]) if values.size else 1.0
        for i in range(min(k, values.size)):
            for j in range(i + 1, values.size):
                if abs(values[i] - values[j]) > CLUSTER_TOLERANCE * scale:
                    continue
                a, b = right[i], right[j]
                overlap = abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b))
                if overlap > 1.0 - 1e-6:
                    found.append(complex(values[i]))
        return found


def eigensystem(system: NystromSystem, k: int, logger: Optional[Logger] = None) -> SpectralDecomposition:
    return EigenSolver(logger or get_logger('spectral')).solve(system, k)


def richardson(values: FloatArray, ratio: float = 2.0) -> Tuple[float, float]:
    """
    Extrapolated limit and observed order from three values at grid sizes
    n, ratio n, ratio^2 n.
    """
    v0, v1, v2 = (float(v) for v in values)
    d1, d2 = v1 - v0, v2 - v1
    if d2 == 0.0 or d1 == 0.0 or d1 * d2 < 0.0:
        return v2, np.inf
    order = float(np.log(abs(d1 / d2)) / np.log(ratio))
    return v2 + d2 / (ratio ** order - 1.0), order
