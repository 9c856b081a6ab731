import math

import numpy as np
import pytest
import scipy.special

from levyruin.errors import DomainError, MalformedInput, NonIntegrableTail, UnsupportedParameters
from levyruin.levy import (CompoundPoissonModel, CustomModel, DampedStableModel, GaussianModel, KernelRoute,
                           StableModel, VarianceGammaModel, characteristic_exponent, dump_model, kernel_route,
                           levy_density, loads_model, parse_model, stable_case, transition_density,
                           validate_model)


@pytest.mark.parametrize('model', [
    StableModel(alpha=1.5, beta=0.3),
    StableModel(alpha=0.7),
    GaussianModel(A=2.0, gamma=0.5),
    VarianceGammaModel(C1=1.0, C2=2.0, G=1.5, M=3.0),
    CompoundPoissonModel(form='gaussian', C=1.0, s=0.5),
])
def test_exponent_vanishes_at_zero_and_is_hermitian(model):
    assert characteristic_exponent(model, 0.0) == 0j
    for z in (0.3, 1.0, 4.0):
        value = characteristic_exponent(model, z)
        assert value.real >= 0.0
        assert characteristic_exponent(model, -z) == pytest.approx(value.conjugate(), rel=1e-10, abs=1e-12)


def test_wiener_exponent():
    assert characteristic_exponent(StableModel(alpha=2.0), 1.3) == pytest.approx(0.5 * 1.3 ** 2)


def test_symmetric_stable_exponent_is_real():
    model = StableModel(alpha=1.5, beta=0.0)
    assert characteristic_exponent(model, 1.0) == pytest.approx(1.0)
    for z in np.linspace(-5.0, 5.0, 11):
        assert characteristic_exponent(model, z).imag == 0.0


def test_numeric_exponent_matches_closed_form():
    model = VarianceGammaModel(C1=1.0, C2=2.0, G=1.5, M=3.0, gamma=0.2)
    for z in (0.5, 2.0):
        assert model.numeric_jump_exponent(z) == pytest.approx(model.jump_exponent(z), rel=1e-5)


def test_stable_density_from_constants():
    model = StableModel.from_levy_constants(1.0, 1.0, 1.0)
    assert levy_density(model, 2.0) == pytest.approx(0.25)
    assert levy_density(model, -2.0) == levy_density(model, 2.0)


def test_derived_constants_reproduce_the_exponent():
    model = StableModel(alpha=1.5, beta=0.4)
    C1, C2 = model.levy_constants
    rebuilt = StableModel.from_levy_constants(1.5, C1, C2)
    assert rebuilt.beta == pytest.approx(0.4)
    assert rebuilt.scale == pytest.approx(1.0)
    assert model.numeric_jump_exponent(1.0) == pytest.approx(model.jump_exponent(1.0), rel=1e-5)


def test_variance_gamma_density():
    model = VarianceGammaModel(C1=1.0, C2=1.0, G=1.0, M=1.0)
    assert levy_density(model, 1.0) == pytest.approx(math.exp(-1.0))


def test_density_at_origin_is_undefined():
    with pytest.raises(DomainError):
        levy_density(StableModel(alpha=1.5), 0.0)


def test_gaussian_heat_kernel():
    assert transition_density(GaussianModel(A=1.0), 0.0, 1.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi),
                                                                               abs=1e-6)


def test_cauchy_density_at_origin():
    assert transition_density(StableModel(alpha=1.0), 0.0, 1.0) == pytest.approx(1.0 / math.pi, abs=1e-6)


def test_cauchy_density_profile():
    model = StableModel(alpha=1.0)
    for x in (0.5, 2.0, 5.0):
        assert transition_density(model, x, 1.0) == pytest.approx(1.0 / (math.pi * (1.0 + x * x)), abs=1e-6)


def test_gaussian_density_integrates_to_one():
    grid = np.linspace(-8.0, 8.0, 161)
    values = [transition_density(GaussianModel(A=1.0), x, 1.0) for x in grid]
    assert min(values) >= 0.0
    assert np.trapezoid(values, grid) == pytest.approx(1.0, abs=1e-6)


def test_stable_density_scaling():
    model = StableModel(alpha=1.5, beta=0.0)
    t = 2.0
    for x in (0.0, 0.7):
        scaled = t ** (-1.0 / 1.5) * transition_density(model, x * t ** (-1.0 / 1.5), 1.0)
        assert transition_density(model, x, t) == pytest.approx(scaled, rel=1e-5, abs=1e-8)


def test_compound_poisson_has_no_density():
    with pytest.raises(NonIntegrableTail, match='jump-chain'):
        transition_density(CompoundPoissonModel(), 0.0, 1.0)


def test_validation_small_and_large_alpha():
    small = validate_model(StableModel(alpha=0.5))
    assert small.passed
    assert small.condition('small_jump_decay').passed
    assert not small.condition('finite_first_tail_moment').passed

    large = validate_model(StableModel(alpha=1.5))
    assert large.passed
    assert large.condition('finite_first_tail_moment').passed
    assert not large.condition('small_jump_decay').passed
    assert large.condition('stable_case').passed


def test_validation_reports_compound_poisson_mass(laplace_jumps):
    report = validate_model(laplace_jumps)
    assert report.condition('finite_mass').passed
    assert report.mass == pytest.approx(2.0)


def test_validation_flags_unsupported_stable_case():
    report = validate_model(StableModel(alpha=0.5, beta=1.0))
    assert not report.condition('stable_case').passed


@pytest.mark.parametrize('alpha, beta, case', [
    (1.5, 0.0, 'I'), (0.5, -0.5, 'I'), (1.5, 1.0, 'II'), (1.5, -1.0, 'II'), (1.0, 0.0, 'III'), (2.0, 0.0, 'wiener'),
])
def test_stable_case(alpha, beta, case):
    assert stable_case(alpha, beta) == case


@pytest.mark.parametrize('alpha, beta', [(1.0, 0.5), (0.5, 1.0)])
def test_stable_case_rejects(alpha, beta):
    with pytest.raises(UnsupportedParameters, match='III'):
        stable_case(alpha, beta)


def test_descriptor_round_trip():
    model = VarianceGammaModel(C1=1.0, C2=2.0, G=1.5, M=3.0)
    assert loads_model(dump_model(model)) == model


@pytest.mark.parametrize('text', ['', '   ', '{"kind": "stable"', '[1, 2]',
                                  '{"kind": "stable", "alpha": 1.5, "colour": "red"}',
                                  '{"kind": "unicorn"}'])
def test_descriptor_rejects(text):
    with pytest.raises(MalformedInput):
        loads_model(text)


def test_damped_stable_exponent():
    model = DampedStableModel(alpha=0.7, C1=1.0, C2=1.0, lambda1=1.0, lambda2=1.0)
    z, alpha = 1.5, 0.7
    tempered = (1.0 + z * z) ** (alpha / 2.0) * math.cos(alpha * math.atan(z)) - 1.0
    expected = -2.0 * scipy.special.gamma(-alpha) * tempered
    value = characteristic_exponent(model, z)
    assert value.real == pytest.approx(expected, rel=1e-6)
    assert value.imag == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize('alpha, route', [(0.7, KernelRoute.UNCOMPENSATED), (1.3, KernelRoute.FULL)])
def test_damped_stable_routes(alpha, route):
    model = DampedStableModel(alpha=alpha, C1=1.0, C2=2.0, lambda1=1.0, lambda2=0.5)
    assert kernel_route(model) == route
    report = validate_model(model)
    assert report.passed
    assert report.condition('finite_first_tail_moment').passed
    assert not report.condition('finite_mass').passed


def test_custom_density_matches_compound_poisson(laplace_jumps):
    model = CustomModel(nu=lambda y: math.exp(-abs(y)), total_mass=2.0, is_symmetric=True)
    assert kernel_route(model) == KernelRoute.FINITE_MASS
    assert levy_density(model, [-1.0, 2.0]) == pytest.approx(np.exp([-1.0, -2.0]))
    for z in (0.5, 2.0):
        assert characteristic_exponent(model, z) == pytest.approx(characteristic_exponent(laplace_jumps, z),
                                                                 rel=1e-6, abs=1e-9)


def test_custom_models_have_no_descriptor():
    model = CustomModel(nu=lambda y: abs(y) ** -1.5, jump_index=0.5, decay_index=0.5)
    with pytest.raises(MalformedInput, match='cannot be written'):
        model.descriptor()
    with pytest.raises(MalformedInput, match='only available from Python'):
        parse_model({'kind': 'custom'})
