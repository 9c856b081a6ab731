import math

import numpy as np
import pytest

from levyruin.domain import Interval
from levyruin.errors import DomainError, MalformedInput, UnsupportedParameters
from levyruin.levy import GaussianModel
from levyruin.quasipotential import CauchyKernel, StableCaseOneKernel, StableOneSidedKernel, WienerGreenKernel
from levyruin.spectral import (Regime, assemble, conditional_asymptotics, conditional_series, default_terms,
                               eigensystem, laplace_from_resolvent, laplace_transform, leading_asymptotics,
                               regime_classify, regularity_report, rescaled_time, resolvent_psi, richardson,
                               stable_index, stable_scaling, survival_asymptotic, survival_series)
from levyruin.wiener_oracle import p2_series

UNIT_CAUCHY_LAMBDA1 = 0.8637265


def laplace_exact(s: float, a: float = 1.0) -> float:
    """ Laplace transform of p(t) for Brownian motion on [-a, a] """
    return (1.0 - 1.0 / math.cosh(a * math.sqrt(2.0 * s))) / s


def test_system_layout(wiener_system):
    assert wiener_system.n == 256
    assert wiener_system.symmetric
    assert np.sum(wiener_system.weights) == pytest.approx(2.0)
    assert np.all(np.diff(wiener_system.nodes) > 0.0)


def test_too_few_nodes():
    with pytest.raises(MalformedInput):
        assemble(WienerGreenKernel(-1.0, 1.0), 8)


def test_wiener_eigenvalues(wiener_dec):
    assert wiener_dec.k == 10
    expected = [8.0 / (n * n * math.pi ** 2) for n in range(1, 11)]
    assert wiener_dec.eigenvalues.real == pytest.approx(expected, abs=1e-6)
    assert np.all(np.abs(wiener_dec.eigenvalues.imag) == 0.0)
    assert not wiener_dec.defective


def test_wiener_eigenfunctions(wiener_dec):
    x = np.array([-0.5, 0.0, 0.25])
    g1 = wiener_dec.g(0, x).real
    # int g1 = 1 is not imposed, only its sign and the pairing
    assert np.all(g1 > 0.0)
    assert g1 / g1[1] == pytest.approx(np.cos(0.5 * math.pi * x), rel=1e-6)
    assert wiener_dec.biorthogonality_residual() < 1e-8


def test_k_out_of_range(wiener_system):
    with pytest.raises(UnsupportedParameters):
        eigensystem(wiener_system, 0)
    with pytest.raises(UnsupportedParameters):
        eigensystem(wiener_system, wiener_system.n + 1)


@pytest.mark.parametrize('t', [0.5, 1.0, 3.0])
def test_series_matches_oracle(wiener_dec, t):
    estimate = survival_series(wiener_dec, t)
    assert estimate.values[0] == pytest.approx(p2_series(1.0, 1.0, t), abs=1e-6)
    assert estimate.truncation[0] < 1e-6
    assert not estimate.warnings


def test_series_warns_at_short_times(wiener_dec):
    estimate = survival_series(wiener_dec, 1e-4, k=2)
    assert estimate.warnings


def test_series_rejects_non_positive_times(wiener_dec):
    with pytest.raises(DomainError):
        survival_series(wiener_dec, [0.0, 1.0])


def test_leading_terms(wiener_dec):
    lambda1, c1 = leading_asymptotics(wiener_dec)
    assert lambda1 == pytest.approx(8.0 / math.pi ** 2, rel=1e-7)
    assert c1 == pytest.approx(4.0 / math.pi, rel=1e-6)
    estimate = survival_asymptotic(wiener_dec, [2.0, 4.0])
    assert estimate.values[1] == pytest.approx(c1 * math.exp(-4.0 / lambda1))
    assert estimate.values[0] == pytest.approx(p2_series(1.0, 1.0, 2.0), rel=1e-5)


def test_conditional_series(wiener_dec):
    whole = Interval(-1.0, 1.0)
    conditional = conditional_series(wiener_dec, 0.0, whole, 1.0).values[0]
    assert conditional == pytest.approx(survival_series(wiener_dec, 1.0).values[0], abs=1e-8)
    assert conditional_asymptotics(wiener_dec, 0.0, whole) == pytest.approx(4.0 / math.pi, rel=1e-6)
    inner = conditional_series(wiener_dec, 0.0, Interval(-0.5, 0.5), 1.0).values[0]
    assert 0.0 < inner < conditional


def test_conditional_start_outside(wiener_dec):
    with pytest.raises(DomainError):
        conditional_series(wiener_dec, 0.9, Interval(-0.5, 0.5), 1.0)


@pytest.mark.parametrize('s', [0.25, 1.0, 4.0])
def test_laplace_identity(wiener_system, wiener_dec, s):
    assert laplace_transform(wiener_dec, s) == pytest.approx(laplace_exact(s), abs=1e-5)
    assert laplace_from_resolvent(wiener_system, s) == pytest.approx(laplace_exact(s), abs=1e-6)


def test_laplace_reference_value(wiener_system):
    assert laplace_from_resolvent(wiener_system, 1.0) == pytest.approx(0.540902, abs=1e-6)


def test_mean_exit_time(wiener_system, wiener_dec):
    assert laplace_from_resolvent(wiener_system, 0.0) == pytest.approx(1.0, abs=1e-8)
    assert laplace_transform(wiener_dec, 0.0) == pytest.approx(1.0, abs=1e-5)


def test_resolvent_at_zero_is_the_origin_row(wiener_system):
    psi = resolvent_psi(wiener_system, 0.0)
    assert psi.values == pytest.approx(1.0 - np.abs(wiener_system.nodes))
    with pytest.raises(DomainError):
        resolvent_psi(wiener_system, -1.0)


def test_cauchy_eigenvalue(cauchy_dec):
    assert cauchy_dec.lambda1 * 2.0 / math.pi == pytest.approx(UNIT_CAUCHY_LAMBDA1, rel=1e-3)
    assert cauchy_dec.eigenvalues[1].real < cauchy_dec.lambda1


def test_cauchy_survival_is_a_probability(cauchy_dec):
    values = survival_series(cauchy_dec, [0.5, 1.0, 2.0, 4.0]).values
    assert np.all(np.diff(values) < 0.0)
    assert 0.0 < values[-1] < values[0] < 1.0


def test_regularity_of_the_wiener_kernel(wiener_system, wiener_dec):
    report = regularity_report(wiener_system, wiener_dec, n_trials=20, seed=2)
    assert report.min_phi > 0.0
    assert report.max_boundary < 1e-12
    assert report.sector_half_angle < 1e-8
    assert report.disk_ok
    assert report.unit_radius_disk_ok
    assert report.real_spectrum
    assert report.conjugate_pairs
    assert report.boundary_index_ok
    assert not report.warnings


def test_regularity_of_the_cauchy_kernel(cauchy_system, cauchy_dec):
    report = regularity_report(cauchy_system, cauchy_dec, n_trials=10)
    assert report.min_phi >= 0.0
    assert report.real_spectrum
    # lambda1 > 1 here, so the radius 1/2 variant cannot hold
    assert not report.unit_radius_disk_ok


def test_one_sided_spectrum():
    system = assemble(StableOneSidedKernel(1.5, 1.0, -1.0, 1.0), 128)
    assert not system.symmetric
    dec = eigensystem(system, 4)
    assert dec.lambda1 > 0.0
    assert abs(dec.eigenvalues[0].imag) < 1e-10
    assert dec.biorthogonality_residual(4) < 1e-6
    values = survival_series(dec, [0.5, 2.0]).values
    assert 0.0 < values[1] < values[0] < 1.0


def test_stable_scaling_on_wiener():
    wide = eigensystem(assemble(WienerGreenKernel(-2.0, 2.0), 64), 1)
    assert wide.lambda1 == pytest.approx(stable_scaling(8.0 / math.pi ** 2, 2.0, 2.0), rel=1e-6)
    assert rescaled_time(4.0, 2.0, 2.0) == 1.0


def test_stable_index(wiener, stable15, variance_gamma):
    assert stable_index(wiener) == 2.0
    assert stable_index(stable15) == 1.5
    assert stable_index(GaussianModel(A=1.0)) == 2.0
    with pytest.raises(UnsupportedParameters):
        stable_index(variance_gamma)
    with pytest.raises(UnsupportedParameters):
        stable_index(GaussianModel(A=1.0, gamma=0.2))


def test_regimes(wiener_dec):
    assert regime_classify(2.0, 'infinity') == (Regime.ESCAPE, 0.0)
    assert regime_classify(2.0, 'zero') == (Regime.CONFINED, 1.0)
    assert regime_classify(2.0, 1.0).limit is None
    balanced = regime_classify(2.0, 1.0, wiener_dec)
    assert balanced.regime == Regime.BALANCED
    assert balanced.limit == pytest.approx(p2_series(1.0, 1.0, 1.0), abs=1e-6)
    with pytest.raises(MalformedInput):
        regime_classify(2.0, 'sometimes')
    with pytest.raises(UnsupportedParameters):
        regime_classify(2.5, 'zero')


def test_richardson():
    limit, order = richardson(np.array([2.0, 1.25, 1.0625]))
    assert limit == pytest.approx(1.0)
    assert order == pytest.approx(2.0)
    assert richardson(np.array([1.0, 1.0, 1.0]))[1] == np.inf


def test_default_terms_come_from_the_whole_spectrum(wiener_system):
    single = eigensystem(wiener_system, 1)
    assert single.k == 1
    assert default_terms(single) > 10

    estimate = survival_series(single, [0.1, 0.5])
    assert estimate.values == pytest.approx([p2_series(1.0, 1.0, t) for t in (0.1, 0.5)], abs=1e-5)
    assert not estimate.warnings


def test_truncated_series_is_clipped(wiener_dec):
    # c1 = 4 / pi, so one term overshoots 1 at short times
    estimate = survival_series(wiener_dec, [0.01, 2.0], k=1)
    assert estimate.values[0] == 1.0
    assert estimate.values[1] == pytest.approx(4.0 / math.pi * math.exp(-2.0 * math.pi ** 2 / 8.0), rel=1e-5)
    assert any('clipped' in w for w in estimate.warnings)


def test_cauchy_eigenvalue_converges(cauchy_dec):
    lambdas = np.array([eigensystem(assemble(CauchyKernel(-1.0, 1.0), 128), 1).lambda1, cauchy_dec.lambda1,
                        eigensystem(assemble(CauchyKernel(-1.0, 1.0), 512), 1).lambda1])
    first, second = np.abs(np.diff(lambdas))
    assert second <= max(0.25 * first, 1e-12)
    limit, _ = richardson(lambdas)
    assert abs(limit - lambdas[-1]) <= 1e-4
    assert lambdas[-1] * 2.0 / math.pi == pytest.approx(UNIT_CAUCHY_LAMBDA1, rel=1e-3)


@pytest.mark.parametrize('n', [128, 256, 512])
def test_weakly_singular_case_one_assembles(n):
    system = assemble(StableCaseOneKernel(0.7, 0.0, -1.0, 1.0), n)
    assert np.all(np.isfinite(system.matrix))
    dec = eigensystem(system, 2)
    assert dec.lambda1 > abs(dec.eigenvalues[1]) > 0.0


def test_weakly_singular_case_one_converges():
    lambdas = [eigensystem(assemble(StableCaseOneKernel(0.7, 0.0, -1.0, 1.0), n), 1).lambda1 for n in (256, 512)]
    assert lambdas[1] == pytest.approx(lambdas[0], rel=1e-3)


@pytest.mark.parametrize('make, alpha', [
    (lambda lo, hi: CauchyKernel(lo, hi), 1.0),
    (lambda lo, hi: StableCaseOneKernel(1.5, 0.0, lo, hi), 1.5),
    (lambda lo, hi: StableOneSidedKernel(1.5, 1.0, lo, hi), 1.5),
])
def test_stable_eigenvalues_scale_with_the_interval(make, alpha):
    unit = eigensystem(assemble(make(-1.0, 1.0), 64), 1).lambda1
    wide = eigensystem(assemble(make(-2.0, 2.0), 64), 1).lambda1
    assert wide == pytest.approx(stable_scaling(unit, 2.0, alpha), rel=1e-5)
