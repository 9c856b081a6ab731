""" convolution.py

    The kernel k(y) of the operator

        S f(x) = (A / 2) f(x) + int k(y - x) f(y) dy

    in the factored generator L = D S D. k is the sum of a base kernel
    k0 with k0'' = nu' away from the origin and a drift term c p0(y), with
    p0(y) = sign(y) / 2, which produces -c f'.

    Construction follows the first route that applies to the model:
     - gaussian: no jumps, k0 = 0
     - log: symmetric stable alpha = 1, k0 = -C log|y|
     - full: int_{|y|<=1} |y| nu' diverges and the first tail moment is
       finite, k0(y) = int_{|t|>=|y|} (|t| - |y|) nu'(t) dt on the side of y
     - uncompensated / finite mass: the first small-jump moment is
       finite, k0(y) = -|y| T0(y) - int_0^|y| |t| nu'(t) dt
    Stable kernels use their closed forms; all others are tabulated.
"""

from dataclasses import dataclass, field
from logging import Logger
from typing import Optional

import numpy as np

from ..errors import UnsupportedParameters
from ..levy import LevyModel, StableModel, KernelRoute, kernel_route
from ..log import get_logger
from ..types import FloatArray, KernelFn, Real, Singularity
from .tables import kernel_table


@dataclass
class ConvolutionKernel:
    k0: KernelFn
    A_half: float
    singularity: str
    gamma_shift: float = 0.0
    exponent: float = 0.0
    """ sigma with k0(y) ~ |y|^{-sigma} at the origin, power class only """
    route: str = KernelRoute.FULL
    symmetric: bool = False
    decays: bool = False
    """ Whether k0 vanishes at infinity (finite first tail moment) """
    model: Optional[LevyModel] = field(default=None, repr=False)

    def eval(self, y: Real):
        y = np.asarray(y, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            values = self.k0(y) + 0.5 * self.gamma_shift * np.sign(y)
        return float(values) if values.ndim == 0 else values

    def __call__(self, y: Real):
        return self.eval(y)

    @property
    def has_integral_part(self) -> bool:
        return self.route != KernelRoute.GAUSSIAN or self.gamma_shift != 0.0

    def cosine_transform(self, x: Real):
        """
        int k(t) cos(x t) dt, through its symbol: the even part of k0
        satisfies x^2 int k0(t) cos(xt) dt = Re lambda_jump(x).
        """
        if self.model is None:
            raise UnsupportedParameters('the cosine transform needs the model the kernel was built from')
        x = np.atleast_1d(np.asarray(x, dtype=float))
        values = np.array([self.model.jump_exponent(float(v)).real / (v * v) if v != 0.0 else np.inf for v in x])
        return values


def _stable_k0(alpha: float, C1: float, C2: float) -> KernelFn:
    def k0(y: FloatArray) -> FloatArray:
        y = np.asarray(y, dtype=float)
        u = np.abs(y)
        side = np.where(y < 0.0, C1, C2)
        with np.errstate(divide='ignore'):
            if alpha == 1.0:
                return -np.log(u) * side
            return u ** (1.0 - alpha) * side / (alpha * (alpha - 1.0))
    return k0


def _zero_k0(y: FloatArray) -> FloatArray:
    return np.zeros_like(np.asarray(y, dtype=float))


class KernelBuilder:
    def __init__(self, logger: Logger):
        self.logger = logger

    def build(self, model: LevyModel) -> ConvolutionKernel:
        route = kernel_route(model)
        if route is None:
            raise UnsupportedParameters(self._route_failure(model))

        A_half = 0.5 * model.gaussian_coefficient
        if route == KernelRoute.GAUSSIAN:
            self.logger.info(f'{model.name}: no jumps, S = (A/2) I')
            return ConvolutionKernel(_zero_k0, A_half, Singularity.NONE, -model.drift, route=route,
                                     symmetric=model.symmetric, decays=True, model=model)

        small = model.small_jump_index
        singularity, exponent = Singularity.NONE, 0.0
        if small is not None and small > 1.0:
            singularity, exponent = Singularity.POWER, small - 1.0
        elif small == 1.0:
            singularity = Singularity.LOG

        if route == KernelRoute.FULL:
            drift = model.compensated_drift()
        elif route == KernelRoute.LOG:
            # symmetric: the compensator integrates to zero
            drift = model.drift
        else:
            drift = model.uncompensated_drift()

        if isinstance(model, StableModel):
            C1, C2 = model.levy_constants
            k0 = _stable_k0(model.alpha, C1, C2)
            self.logger.info(f'stable alpha={model.alpha}: closed-form kernel, C1={C1:.6g}, C2={C2:.6g}')
        else:
            k0 = self._tabulate(model, route == KernelRoute.FULL, singularity == Singularity.LOG)

        kernel = ConvolutionKernel(k0, A_half, singularity, -drift, exponent, route,
                                   symmetric=model.symmetric, decays=model.tail_index > 1.0, model=model)
        self.logger.info(f'{model.name}: {route} kernel, {singularity} singularity, gamma_shift={-drift:.6g}')
        return kernel

    def _tabulate(self, model: LevyModel, compensated: bool, log_singular: bool) -> KernelFn:
        right = kernel_table(model.density, 1.0, compensated, log_singular, self.logger)
        left = kernel_table(model.density, -1.0, compensated, log_singular, self.logger)

        def k0(y: FloatArray) -> FloatArray:
            y = np.asarray(y, dtype=float)
            u = np.abs(y)
            out = np.where(y < 0.0, left(u), right(u))
            return np.where(u == 0.0, np.inf if compensated else 0.0, out)

        self.logger.info(f'{model.name}: tabulated {"compensated" if compensated else "uncompensated"} kernel')
        return k0

    @staticmethod
    def _route_failure(model: LevyModel) -> str:
        if isinstance(model, StableModel) and model.alpha == 1.0:
            return 'stable alpha = 1 needs C1 = C2 (beta = 0) for the logarithmic kernel'
        return (f'{model.name} admits no convolution kernel: the first small-jump moment diverges '
                f'(index {model.small_jump_index}) and so does the first tail moment (index {model.tail_index})')


def build_kernel(model: LevyModel, logger: Optional[Logger] = None) -> ConvolutionKernel:
    return KernelBuilder(logger or get_logger('kernels')).build(model)


def kernel_sign_check(kernel: ConvolutionKernel, points: Optional[FloatArray] = None) -> float:
    """ Sign of k0 on a test grid: +1, -1, or 0 when it changes sign """
    if points is None:
        positive = np.logspace(-4.0, 2.0, 121)
        points = np.concatenate((-positive[::-1], positive))
    values = kernel.k0(points)
    if np.all(values >= 0.0):
        return 1.0
    if np.all(values <= 0.0):
        return -1.0
    return 0.0
