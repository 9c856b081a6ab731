import math

import numpy as np
import pytest

from pydantic import ValidationError

from levyruin.domain import Domain, Interval
from levyruin.errors import BudgetExceeded, UnsupportedParameters
from levyruin.levy import StableModel, VarianceGammaModel
from levyruin.montecarlo import (SimConfig, block_generator, dt_ladder, estimate_conditional_survival,
                                 estimate_hitting_survival, estimate_survival, sample_increment, sampler_for,
                                 steps_for)
from levyruin.spectral import survival_series
from levyruin.wiener_oracle import first_hitting_survival, p2

UNIT = Domain.single(-1.0, 1.0)


def within(estimate, expected: float, sigmas: float = 3.0) -> bool:
    return abs(estimate.p_hat - expected) <= sigmas * estimate.stderr


def empirical_cf(samples: np.ndarray, z: float) -> complex:
    return complex(np.mean(np.exp(1j * z * samples)))


def test_steps_cover_the_horizon():
    assert steps_for(1.0, 0.01) == (100, 0.01)
    n, step = steps_for(1.0, 0.3)
    assert n == 4
    assert step == pytest.approx(0.25)


def test_block_streams_are_independent():
    first = block_generator(3, 0).standard_normal(4)
    assert np.array_equal(first, block_generator(3, 0).standard_normal(4))
    assert not np.array_equal(first, block_generator(3, 1).standard_normal(4))
    assert not np.array_equal(first, block_generator(4, 0).standard_normal(4))


def test_worker_count_does_not_change_the_estimate(gaussian, logger):
    cfg = SimConfig(n_paths=4000, dt=0.01, seed=7, block_size=1000)
    serial = estimate_survival(gaussian, UNIT, 0.5, cfg, logger)
    parallel = estimate_survival(gaussian, UNIT, 0.5, cfg.model_copy(update={'workers': 3}), logger)
    assert serial.p_hat == parallel.p_hat
    assert serial.n_effective == 4000


def test_bridge_corrected_wiener_matches_oracle(gaussian, logger):
    cfg = SimConfig(n_paths=20000, dt=0.01, seed=11, bridge_correction=True)
    estimate = estimate_survival(gaussian, UNIT, 1.0, cfg, logger)
    assert within(estimate, p2(1.0, 1.0, 1.0))
    assert estimate.ci95[0] <= estimate.p_hat <= estimate.ci95[1]


def test_uncorrected_walk_overestimates(gaussian, logger):
    cfg = SimConfig(n_paths=20000, dt=0.05, seed=11)
    estimate = estimate_survival(gaussian, UNIT, 1.0, cfg, logger)
    assert estimate.p_hat > p2(1.0, 1.0, 1.0)


def test_hitting_time(gaussian, logger):
    cfg = SimConfig(n_paths=20000, dt=0.01, seed=5, bridge_correction=True)
    estimate = estimate_hitting_survival(gaussian, 1.0, 1.0, cfg, logger)
    assert within(estimate, first_hitting_survival(1.0, 1.0))


def test_single_step_survives(gaussian, logger):
    cfg = SimConfig(n_paths=1000, dt=1e-3, seed=1)
    assert estimate_survival(gaussian, UNIT, 1e-3, cfg, logger).p_hat == 1.0


def test_antithetic_pairs(gaussian, logger):
    cfg = SimConfig(n_paths=20000, dt=0.01, seed=2, antithetic=True, bridge_correction=True)
    estimate = estimate_survival(gaussian, UNIT, 1.0, cfg, logger)
    assert within(estimate, p2(1.0, 1.0, 1.0))
    with pytest.raises(ValidationError):
        SimConfig(n_paths=3, antithetic=True)


def test_antithetic_needs_a_symmetric_law(onesided15, logger):
    with pytest.raises(UnsupportedParameters):
        estimate_survival(onesided15, UNIT, 0.1, SimConfig(n_paths=100, dt=0.01, antithetic=True), logger)


def test_bridge_needs_brownian_motion(stable15, logger):
    with pytest.raises(UnsupportedParameters):
        estimate_survival(stable15, UNIT, 0.1, SimConfig(n_paths=100, dt=0.01, bridge_correction=True), logger)


def test_budget_returns_a_partial_estimate(gaussian, logger):
    cfg = SimConfig(n_paths=1000, dt=0.01, seed=3, budget=5000)
    with pytest.raises(BudgetExceeded) as info:
        estimate_survival(gaussian, UNIT, 1.0, cfg, logger)
    partial = info.value.partial
    assert partial.n_effective == 50
    assert partial.n_paths == 1000
    assert 0.0 <= partial.p_hat <= 1.0


def test_models_without_a_sampler(nig, meixner):
    for model in (nig, meixner):
        with pytest.raises(UnsupportedParameters):
            sampler_for(model)


def test_conditional_on_the_whole_domain(gaussian, logger):
    cfg = SimConfig(n_paths=2000, dt=0.01, seed=9)
    whole = estimate_conditional_survival(gaussian, UNIT, 0.0, Interval(-1.0, 1.0), 0.5, cfg, logger)
    assert whole.p_hat == estimate_survival(gaussian, UNIT, 0.5, cfg, logger).p_hat
    part = estimate_conditional_survival(gaussian, UNIT, 0.0, Interval(0.0, 1.0), 0.5, cfg, logger)
    assert part.p_hat < whole.p_hat
    with pytest.raises(UnsupportedParameters):
        estimate_conditional_survival(gaussian, UNIT, 1.5, Interval(0.0, 1.0), 0.5, cfg, logger)


def test_multi_interval_domain_is_experimental(gaussian, logger):
    domain = Domain.from_pairs([[-3.0, -2.0], [-1.0, 1.0]])
    cfg = SimConfig(n_paths=1000, dt=0.01, seed=4)
    estimate = estimate_survival(gaussian, domain, 0.5, cfg, logger)
    assert estimate.experimental
    assert 0.0 < estimate.p_hat < 1.0
    with pytest.raises(UnsupportedParameters):
        estimate_survival(gaussian, domain, 0.5, cfg.model_copy(update={'bridge_correction': True}), logger)


def test_dt_ladder(gaussian, logger):
    ladder = dt_ladder(gaussian, UNIT, 0.5, SimConfig(n_paths=500, dt=0.1, seed=6), levels=3, logger=logger)
    assert [e.steps for e in ladder] == [5, 10, 20]
    assert ladder[2].dt == pytest.approx(0.025)


def test_estimate_record(gaussian, logger):
    estimate = estimate_survival(gaussian, UNIT, 0.2, SimConfig(n_paths=200, dt=0.05, seed=8), logger)
    record = estimate.to_json()
    assert record['model']['kind'] == 'gaussian'
    assert record['domain'] == [[-1.0, 1.0]]
    assert record['seed'] == 8


@pytest.mark.parametrize('model', [
    StableModel(alpha=1.5, beta=0.5),
    StableModel(alpha=0.8, beta=-0.3, scale=2.0),
    StableModel(alpha=1.0, scale=2.0 / math.pi),
    VarianceGammaModel(C1=1.0, C2=2.0, G=1.5, M=3.0),
])
def test_increments_follow_the_exponent(model):
    dt = 0.5
    samples = sample_increment(model, dt, np.random.default_rng(17), size=200_000)
    for z in (0.5, 1.0, 2.0):
        expected = complex(np.exp(-dt * model.characteristic_exponent(z)))
        assert abs(empirical_cf(samples, z) - expected) < 0.012


def test_compound_poisson_increments(laplace_jumps):
    samples = sample_increment(laplace_jumps, 1.0, np.random.default_rng(5), size=200_000)
    for z in (0.5, 2.0):
        expected = math.exp(-(2.0 - 2.0 / (1.0 + z * z)))
        assert abs(empirical_cf(samples, z) - expected) < 0.012
    assert np.mean(samples == 0.0) == pytest.approx(math.exp(-2.0), abs=0.005)


def test_single_increment(gaussian):
    value = sample_increment(gaussian, 0.1, np.random.default_rng(0))
    assert isinstance(value, float)
    with pytest.raises(UnsupportedParameters):
        sample_increment(gaussian, 0.0, np.random.default_rng(0))


def test_bridge_killing_keeps_whole_paths(gaussian, logger):
    cfg = SimConfig(n_paths=3000, dt=0.05, seed=12, bridge_correction=True)
    corrected = estimate_survival(gaussian, UNIT, 1.0, cfg, logger)
    survivors = corrected.p_hat * cfg.n_paths
    assert survivors == pytest.approx(round(survivors), abs=1e-6)
    assert corrected.stderr == pytest.approx(math.sqrt(corrected.p_hat * (1.0 - corrected.p_hat) / cfg.n_paths))

    plain = estimate_survival(gaussian, UNIT, 1.0, cfg.model_copy(update={'bridge_correction': False}), logger)
    assert corrected.p_hat < plain.p_hat


def test_cauchy_ladder_approaches_the_spectral_value(cauchy, cauchy_dec, logger):
    spectral = survival_series(cauchy_dec, 1.0).values[0]
    ladder = dt_ladder(cauchy, UNIT, 1.0, SimConfig(n_paths=20000, dt=0.01, seed=21), levels=3, logger=logger)

    # skipped crossings between monitoring times only ever add survivors
    for estimate in ladder:
        assert estimate.p_hat >= spectral - 3.0 * estimate.stderr
    coarse, fine = ladder[0], ladder[-1]
    assert fine.p_hat <= coarse.p_hat + 3.0 * math.hypot(coarse.stderr, fine.stderr)
    assert fine.p_hat - spectral < 0.05
