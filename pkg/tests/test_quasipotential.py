import math

import numpy as np
import pytest

from levyruin.errors import DomainError, MalformedInput, UnsupportedParameters
from levyruin.levy import GaussianModel, StableModel
from levyruin.quasipotential import (CauchyKernel, StableCaseOneKernel, StableOneSidedKernel, WienerGreenKernel,
                                     case_one_constants, cauchy_kernel, closed_form_kernel, majorant_check,
                                     quasipotential_for, shift_to_symmetric, solve_rho, stable_kernel_case1,
                                     wiener_green)

KAC_VALUE = 0.5 * math.log(2.0 + math.sqrt(3.0))


def test_wiener_green_values():
    assert wiener_green(1.0, 1.0, 0.0, 0.0) == pytest.approx(1.0)
    assert wiener_green(1.0, 3.0, 0.0, 0.0) == pytest.approx(1.5)
    assert wiener_green(1.0, 1.0, 0.5, -0.5) == pytest.approx(wiener_green(1.0, 1.0, -0.5, 0.5))


def test_wiener_green_outside():
    with pytest.raises(DomainError):
        wiener_green(1.0, 1.0, 1.5, 0.0)


def test_kernel_vanishes_on_the_boundary():
    kernel = WienerGreenKernel(-1.0, 1.0)
    assert kernel(0.0, 0.0) == pytest.approx(1.0)
    assert kernel(-1.0, 0.3) == 0.0
    assert kernel(0.3, 1.0) == 0.0
    assert kernel(2.0, 0.0) == 0.0


def test_wiener_kernel_scales_with_A():
    assert WienerGreenKernel(-1.0, 1.0, A=2.0)(0.0, 0.0) == pytest.approx(0.5)


def test_shift_reduction():
    reduction = shift_to_symmetric(-3.0, 1.0)
    assert reduction.c == 2.0
    assert reduction.delta == 1.0
    assert WienerGreenKernel(-3.0, 1.0)(0.0, 0.0) == pytest.approx(WienerGreenKernel(-2.0, 2.0)(1.0, 1.0))
    shifted = StableCaseOneKernel(1.5, 0.0, -3.0, 1.0)
    assert shifted(0.0, 0.0) == pytest.approx(stable_kernel_case1(1.5, 0.0, 2.0, 1.0, 1.0))


def test_shift_needs_the_origin():
    with pytest.raises(MalformedInput):
        shift_to_symmetric(0.5, 1.0)


def test_kac_value():
    assert cauchy_kernel(1.0, 0.0, 0.5) == pytest.approx(KAC_VALUE)
    assert CauchyKernel(-1.0, 1.0)(0.0, 0.5) == pytest.approx(0.65848, abs=1e-5)
    assert np.isinf(cauchy_kernel(1.0, 0.2, 0.2))


def test_cauchy_model_gets_kac_kernel(cauchy):
    kernel = closed_form_kernel(cauchy, -1.0, 1.0)
    assert isinstance(kernel, CauchyKernel)
    assert kernel(0.0, 0.5) == pytest.approx(KAC_VALUE)
    unit = closed_form_kernel(StableModel(alpha=1.0), -1.0, 1.0)
    assert unit(0.0, 0.5) == pytest.approx(KAC_VALUE * 2.0 / math.pi)


def test_symmetric_rho():
    assert solve_rho(1.5, 0.0) == pytest.approx(0.25)
    mu, rho, _ = case_one_constants(1.2, 0.5)
    assert math.sin(math.pi * rho) == pytest.approx(
        (0.5 / 1.5) * math.sin(math.pi * (mu - rho)), abs=1e-12)


@pytest.mark.parametrize('alpha, beta', [(1.5, 0.4), (0.6, -0.3), (1.2, 0.0)])
def test_case_one_reflection(alpha, beta):
    x = np.array([0.3, -0.6, 0.1])
    y = np.array([-0.2, 0.5, 0.7])
    forward = stable_kernel_case1(alpha, beta, 1.0, x, y)
    mirrored = stable_kernel_case1(alpha, -beta, 1.0, -x, -y)
    assert forward == pytest.approx(mirrored, rel=1e-10)


def test_case_one_is_non_negative_and_symmetric():
    kernel = StableCaseOneKernel(1.5, 0.0, -1.0, 1.0)
    grid = np.linspace(-0.95, 0.95, 21)
    X, Y = np.meshgrid(grid, grid, indexing='ij')
    values = kernel(X, Y)
    assert np.all(values >= -1e-12)
    assert values == pytest.approx(values.T, rel=1e-10, abs=1e-14)
    assert kernel(-1.0, 0.2) == 0.0


def test_one_sided_kernel():
    kernel = StableOneSidedKernel(1.5, 1.0, -1.0, 1.0)
    grid = np.linspace(-0.95, 0.95, 21)
    X, Y = np.meshgrid(grid, grid, indexing='ij')
    assert np.all(kernel(X, Y) >= -1e-12)
    mirrored = StableOneSidedKernel(1.5, -1.0, -1.0, 1.0)
    assert mirrored(0.3, -0.4) == pytest.approx(kernel(-0.3, 0.4))


def test_closed_form_dispatch(wiener, stable15, onesided15, gaussian):
    assert isinstance(closed_form_kernel(wiener, -1.0, 1.0), WienerGreenKernel)
    assert isinstance(closed_form_kernel(gaussian, -1.0, 1.0), WienerGreenKernel)
    assert isinstance(closed_form_kernel(stable15, -1.0, 1.0), StableCaseOneKernel)
    assert isinstance(closed_form_kernel(onesided15, -1.0, 1.0), StableOneSidedKernel)


def test_closed_form_refuses(variance_gamma):
    with pytest.raises(UnsupportedParameters):
        closed_form_kernel(variance_gamma, -1.0, 1.0)
    with pytest.raises(UnsupportedParameters):
        closed_form_kernel(GaussianModel(A=1.0, gamma=0.5), -1.0, 1.0)
    with pytest.raises(UnsupportedParameters):
        closed_form_kernel(StableModel(alpha=1.5, gamma=0.3), -1.0, 1.0)


def test_unsupported_stable_has_no_fallback():
    with pytest.raises(UnsupportedParameters):
        quasipotential_for(StableModel(alpha=0.5, beta=1.0), -1.0, 1.0)


def test_quasipotential_method_names(stable15):
    with pytest.raises(UnsupportedParameters):
        quasipotential_for(stable15, -1.0, 1.0, method='magic')


def test_majorant_holds_for_closed_forms(logger):
    for kernel in (WienerGreenKernel(-1.0, 2.0), StableCaseOneKernel(1.5, 0.4, -1.0, 1.0)):
        report = majorant_check(kernel, 40, seed=5, logger=logger)
        assert report.passed
        assert report.max_ratio <= 1.0 + 1e-9
        assert report.n_samples == 40


def test_majorant_with_no_sample_points():
    assert majorant_check(WienerGreenKernel(-1.0, 1.0), 0).passed


CLOSED_FORMS = {
    'wiener': lambda lo, hi: WienerGreenKernel(lo, hi),
    'cauchy': lambda lo, hi: CauchyKernel(lo, hi),
    'stable': lambda lo, hi: StableCaseOneKernel(1.5, 0.0, lo, hi),
    'onesided': lambda lo, hi: StableOneSidedKernel(1.5, 1.0, lo, hi),
}


@pytest.mark.parametrize('name', sorted(CLOSED_FORMS))
def test_non_negative_with_boundary_zeros(name):
    kernel = CLOSED_FORMS[name](-1.0, 1.0)
    grid = np.linspace(-0.95, 0.95, 20)
    X, Y = np.meshgrid(grid, grid, indexing='ij')
    with np.errstate(divide='ignore'):
        assert np.all(kernel(X, Y) >= -1e-9)

    inside = np.linspace(-0.9, 0.9, 7)
    for edge in (-1.0, 1.0):
        assert np.asarray(kernel(np.full(7, edge), inside)) == pytest.approx(np.zeros(7), abs=1e-7)
        assert np.asarray(kernel(inside, np.full(7, edge))) == pytest.approx(np.zeros(7), abs=1e-7)


@pytest.mark.parametrize('name', sorted(CLOSED_FORMS))
def test_shift_covariance(name):
    shifted = CLOSED_FORMS[name](-0.5, 1.5)
    centred = CLOSED_FORMS[name](-1.0, 1.0)
    x, y = np.random.default_rng(8).uniform(-0.5, 1.5, size=(2, 20))
    assert np.asarray(shifted(x, y)) == pytest.approx(np.asarray(centred(x - 0.5, y - 0.5)), rel=1e-10, abs=1e-12)
