""" operators.py

    Application of S and of the generator L to sampled functions. Samples
    are read as a cubic spline (or, on request, as a piecewise linear
    function) that vanishes outside the grid.

    The generator is available along two independent paths:
     - direct: L f = (A/2) f'' + gamma f' + int (f(x+y) - f(x) - y f'(x) 1_{|y|<=1}) nu'(y) dy
     - factored: L f = S (f''), which equals D S D f for f vanishing to
       first order at the grid ends
    Both paths act on the same spline, so they agree up to quadrature error.
"""

from typing import Callable, Optional

import numpy as np

from scipy.interpolate import CubicSpline

from ..domain import SampledFunction
from ..errors import MalformedInput
from ..levy import LevyModel
from ..quadrature import Quadrature
from .convolution import ConvolutionKernel, build_kernel

MIN_GENERATOR_NODES = 8
ROW_BLOCK = 128


def spline_of(f: SampledFunction) -> CubicSpline:
    bc = 'clamped' if f.boundary_class else 'not-a-knot'
    return CubicSpline(f.grid, f.values, bc_type=bc)


def _interpolant(f: SampledFunction, interpolation: str) -> Callable[[np.ndarray], np.ndarray]:
    if interpolation == 'linear':
        def linear(y):
            if np.iscomplexobj(f.values):
                return np.interp(y, f.grid, f.values.real) + 1j * np.interp(y, f.grid, f.values.imag)
            return np.interp(y, f.grid, f.values)
        return linear
    if interpolation != 'spline':
        raise MalformedInput(f'unknown interpolation "{interpolation}", expected spline or linear')
    return spline_of(f)


def apply_S(kernel: ConvolutionKernel, f: SampledFunction, interpolation: str = 'spline',
            order: int = 8) -> SampledFunction:
    """
    (A/2) f(x_i) + int k(y - x_i) f(y) dy at every node. The two cells
    touching x_i carry the kernel singularity at one end and get a graded
    rule; every other cell gets `order`-point Gauss-Legendre.
    """
    grid = f.grid
    n = grid.size
    values = kernel.A_half * f.values
    if n < 2 or not kernel.has_integral_part:
        return f.with_values(values)

    interp = _interpolant(f, interpolation)
    lo, hi = grid[:-1], grid[1:]
    Y, W = Quadrature.gauss_legendre(lo, hi, order)
    FW = interp(Y) * W

    power = Quadrature.grading_power(kernel.singularity, kernel.exponent)
    YL, WL, DL = Quadrature.graded_about(lo, hi, 24, power)
    YR, WR, DR = Quadrature.graded_about(hi, lo, 24, power)
    left = np.sum(kernel.eval(DL) * WL * interp(YL), axis=1)
    right = np.sum(kernel.eval(DR) * WR * interp(YR), axis=1)

    integral = np.zeros(n, dtype=np.result_type(FW, left))
    cells = np.arange(n - 1)
    for start in range(0, n, ROW_BLOCK):
        rows = np.arange(start, min(n, start + ROW_BLOCK))
        K = kernel.eval(Y[None, :, :] - grid[rows, None, None])
        per_cell = np.sum(K * FW[None, :, :], axis=2)
        adjacent = (cells[None, :] == rows[:, None]) | (cells[None, :] == rows[:, None] - 1)
        integral[rows] = np.sum(np.where(adjacent, 0.0, per_cell), axis=1)

    integral[:-1] += left
    integral[1:] += right
    return f.with_values(values + integral)


def _check_nodes(f: SampledFunction):
    if f.size < MIN_GENERATOR_NODES:
        raise MalformedInput(
                f'the generator needs at least {MIN_GENERATOR_NODES} nodes to resolve second derivatives, '
                f'got {f.size}')


def apply_generator(model: LevyModel, f: SampledFunction, method: str = 'direct',
                    kernel: Optional[ConvolutionKernel] = None) -> SampledFunction:
    _check_nodes(f)
    if method == 'factored':
        return _factored(model, f, kernel)
    if method == 'direct':
        return _direct(model, f)
    raise MalformedInput(f'unknown generator method "{method}", expected direct or factored')


def _factored(model: LevyModel, f: SampledFunction, kernel: Optional[ConvolutionKernel]) -> SampledFunction:
    kernel = kernel or build_kernel(model)
    spline = spline_of(f)
    # the second derivative of a cubic spline is exactly piecewise linear
    second = SampledFunction(f.grid, spline(f.grid, 2), domain=f.domain)
    result = apply_S(kernel, second, interpolation='linear')
    return f.with_values(result.values)


def _direct(model: LevyModel, f: SampledFunction) -> SampledFunction:
    grid = f.grid
    spline = spline_of(f)
    d1, d2 = spline(grid, 1), spline(grid, 2)
    values = 0.5 * model.gaussian_coefficient * d2 + model.drift * d1
    if not model.has_jumps:
        return f.with_values(values)

    lo, hi = grid[0], grid[-1]

    def shifted_integral(x: float, a: float, b: float) -> complex:
        """ int_a^b nu'(u) f(x + u) du, clipped to the support of f """
        a, b = max(a, lo - x), min(b, hi - x)
        if a >= b:
            return 0.0
        real = Quadrature.adaptive(lambda u: float(model.density(u)) * float(np.real(spline(x + u))), a, b,
                                   what='generator jump integral')
        if not np.iscomplexobj(f.values):
            return real
        imag = Quadrature.adaptive(lambda u: float(model.density(u)) * float(np.imag(spline(x + u))), a, b,
                                   what='generator jump integral')
        return real + 1j * imag

    if not model.compensated:
        mass = model.mass
        jumps = np.array([shifted_integral(x, lo - x, hi - x) for x in grid]) - mass * f.values
        return f.with_values(values + jumps)

    # on (x - delta, x + delta) the spline is one cubic per side, so Taylor is exact
    delta = min(1e-3, 0.25 * float(np.min(np.diff(grid))))
    m2 = model.moment(2, 0.0, delta)
    m3_right = Quadrature.adaptive(lambda u: u ** 3 * float(model.density(u)), 0.0, delta, what='third moment')
    m3_left = -Quadrature.adaptive(lambda u: u ** 3 * float(model.density(-u)), 0.0, delta, what='third moment')
    tail_mass = model.moment(0, delta, np.inf)
    compensator = model.moment(1, delta, 1.0) if delta < 1.0 else 0.0

    third_right = spline(np.nextafter(grid, np.inf), 3)
    third_left = spline(np.nextafter(grid, -np.inf), 3)
    near = 0.5 * d2 * m2 + (third_right * m3_right + third_left * m3_left) / 6.0

    far = np.array([shifted_integral(x, -np.inf, -delta) + shifted_integral(x, delta, np.inf) for x in grid])
    return f.with_values(values + near + far - tail_mass * f.values - compensator * d1)
