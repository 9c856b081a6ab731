""" engine.py

    Path simulation on a time grid. Work is split into blocks of paths;
    each block draws from its own Philox stream keyed by (seed, block), so
    the estimate does not depend on the worker count or on scheduling.
    Block counts are reduced in block order.
"""

import math

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from logging import Logger
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..domain import Domain, Interval
from ..errors import BudgetExceeded, UnsupportedParameters
from ..levy import LevyModel
from ..log import get_logger
from .config import MCEstimate, SimConfig
from .samplers import IncrementSampler, sampler_for

Z95 = 1.959963984540054


@dataclass(frozen=True)
class Region:
    """ Where a path must stay, and the levels a Brownian bridge may cross """
    inside: Callable[[np.ndarray], np.ndarray]
    levels: Tuple[float, ...]
    end: Optional[Callable[[np.ndarray], np.ndarray]] = None
    description: Optional[list] = None
    experimental: bool = False

    @classmethod
    def of_domain(cls, domain: Domain, end: Optional[Interval] = None) -> 'Region':
        levels = (domain.lower, domain.upper) if domain.is_single else ()
        return cls(inside=domain.contains, levels=levels,
                   end=None if end is None else end.contains,
                   description=domain.to_pairs(), experimental=not domain.is_single)

    @classmethod
    def below(cls, a: float) -> 'Region':
        return cls(inside=lambda x: x <= a, levels=(a,), description=[[None, a]])


@dataclass(frozen=True)
class BlockResult:
    paths: int
    survivors: int
    pair_counts: Tuple[int, int, int]
    """ Antithetic pairs with 0, 1 and 2 survivors """


def steps_for(t: float, dt: float) -> Tuple[int, float]:
    """ Number of steps covering [0, t] and the step actually used """
    n = max(1, int(math.ceil(t / dt - 1e-9)))
    return n, t / n


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(int(seed) << 64) | int(block)))


class MonteCarloEngine:
    def __init__(self, logger: Optional[Logger] = None):
        self.logger: Logger = logger or get_logger('montecarlo')

    def _block(self, sampler: IncrementSampler, region: Region, cfg: SimConfig, block: int, size: int,
               steps: int, step: float, x0: float) -> BlockResult:
        rng = block_generator(cfg.seed, block)
        x = np.full(size, float(x0))
        alive = np.asarray(region.inside(x), dtype=bool)
        A = sampler.brownian_coefficient if cfg.bridge_correction else None

        for _ in range(steps):
            dx = sampler.sample(rng, size, step, antithetic=cfg.antithetic)
            x_new = x + dx
            alive &= region.inside(x_new)

            if A is not None and region.levels:
                stay = np.ones(size)
                for level in region.levels:
                    gap = np.maximum((level - x) * (level - x_new), 0.0)
                    stay *= -np.expm1(-2.0 * gap / (A * step))
                alive &= rng.uniform(0.0, 1.0, size) < stay
            x = x_new

        if region.end is not None:
            alive &= region.end(x)

        pairs = (0, 0, 0)
        if cfg.antithetic:
            half = size // 2
            both = alive[:half].astype(int) + alive[half:].astype(int)
            pairs = tuple(int(np.count_nonzero(both == k)) for k in range(3))
        return BlockResult(paths=size, survivors=int(np.count_nonzero(alive)), pair_counts=pairs)

    def _check(self, sampler: IncrementSampler, region: Region, cfg: SimConfig):
        if cfg.bridge_correction:
            if sampler.brownian_coefficient is None:
                raise UnsupportedParameters('the Brownian-bridge correction only applies to Brownian motion')
            if not region.levels:
                raise UnsupportedParameters('the Brownian-bridge correction needs a single-interval domain')
        if cfg.antithetic and not sampler.reflectable:
            raise UnsupportedParameters(
                    f'antithetic pairs need a law symmetric about its drift, {sampler.model.name} is not')

    def _summarize(self, results: Sequence[BlockResult], cfg: SimConfig, steps: int, step: float,
                   model: LevyModel, region: Region) -> MCEstimate:
        n = sum(r.paths for r in results)
        survivors = sum(r.survivors for r in results)
        p_hat = survivors / n if n else 0.0

        if cfg.antithetic and n:
            counts = np.sum([r.pair_counts for r in results], axis=0)
            n_pairs = int(counts.sum())
            mean_sq = (0.25 * counts[1] + counts[2]) / n_pairs
            var = max(mean_sq - p_hat ** 2, 0.0) * n_pairs / max(n_pairs - 1, 1)
            stderr = math.sqrt(var / n_pairs)
        else:
            stderr = math.sqrt(p_hat * (1.0 - p_hat) / n) if n else math.inf

        half = Z95 * stderr
        return MCEstimate(p_hat=p_hat, stderr=stderr, ci95=(max(0.0, p_hat - half), min(1.0, p_hat + half)),
                          n_paths=cfg.n_paths, n_effective=n, dt=step, steps=steps, seed=cfg.seed,
                          model=model.descriptor(), domain=region.description, experimental=region.experimental)

    def run(self, model: LevyModel, region: Region, t: float, cfg: SimConfig, x0: float = 0.0) -> MCEstimate:
        if not t > 0.0:
            raise UnsupportedParameters(f'time horizon must be positive, got {t}')
        sampler = sampler_for(model)
        self._check(sampler, region, cfg)
        steps, step = steps_for(t, cfg.dt)

        affordable = min(cfg.n_paths, cfg.budget // steps)
        if cfg.antithetic:
            affordable -= affordable % 2
        sizes: List[int] = [cfg.block_size] * (affordable // cfg.block_size)
        if affordable % cfg.block_size:
            sizes.append(affordable % cfg.block_size)

        if region.experimental:
            self.logger.warning('Monte Carlo on a multi-interval domain is experimental')
        self.logger.info(f'Simulating {affordable} of {cfg.n_paths} {model.name} paths, {steps} steps of {step:.3g}, '
                         f'{len(sizes)} blocks on {cfg.workers} workers')

        def work(args):
            block, size = args
            return self._block(sampler, region, cfg, block, size, steps, step, x0)

        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(work, enumerate(sizes)))

        estimate = self._summarize(results, cfg, steps, step, model, region)
        if affordable < cfg.n_paths:
            self.logger.warning(f'Budget of {cfg.budget} steps exhausted after {affordable} paths')
            raise BudgetExceeded(
                    f'{cfg.n_paths} paths x {steps} steps exceeds the budget of {cfg.budget}; '
                    f'partial estimate from {affordable} paths', partial=estimate)

        self.logger.info(f'p_hat = {estimate.p_hat:.6f} +- {estimate.stderr:.2e}')
        return estimate


def estimate_survival(model: LevyModel, domain: Domain, t: float, cfg: SimConfig,
                      logger: Optional[Logger] = None) -> MCEstimate:
    """ P(X stays in the domain up to t | X_0 = 0) """
    return MonteCarloEngine(logger).run(model, Region.of_domain(domain), t, cfg)


def estimate_conditional_survival(model: LevyModel, domain: Domain, x0: float, sub: Interval, t: float,
                                  cfg: SimConfig, logger: Optional[Logger] = None) -> MCEstimate:
    """ P(X stays in the domain up to t and X_t lies in `sub` | X_0 = x0) """
    if not domain.contains(x0, closed=False):
        raise UnsupportedParameters(f'start point {x0} is not inside the domain')
    return MonteCarloEngine(logger).run(model, Region.of_domain(domain, end=sub), t, cfg, x0=x0)


def estimate_hitting_survival(model: LevyModel, a: float, t: float, cfg: SimConfig,
                              logger: Optional[Logger] = None) -> MCEstimate:
    """ P(sup_{s<=t} X_s < a) """
    if not a > 0.0:
        raise UnsupportedParameters(f'barrier must be positive, got {a}')
    return MonteCarloEngine(logger).run(model, Region.below(a), t, cfg)


def dt_ladder(model: LevyModel, domain: Domain, t: float, cfg: SimConfig, levels: int = 3,
              logger: Optional[Logger] = None) -> List[MCEstimate]:
    """ Estimates at dt, dt/2, dt/4, ... with the same seed """
    engine = MonteCarloEngine(logger)
    region = Region.of_domain(domain)
    return [engine.run(model, region, t, cfg.model_copy(update={'dt': cfg.dt / 2 ** k})) for k in range(levels)]
