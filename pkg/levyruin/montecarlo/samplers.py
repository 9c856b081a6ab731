""" samplers.py

    Exact increment samplers X_{t+dt} - X_t for the model families that
    admit one: Brownian motion, stable laws (Chambers-Mallows-Stuck),
    compound Poisson and Variance Gamma.

    Stable increments follow the unit exponent
        lambda(z) = |z|^alpha (1 - i beta sign(z) tan(pi alpha / 2))
    so an increment over dt is the unit law scaled by (scale dt)^{1/alpha}.
"""

import abc
import math

from typing import Optional, Tuple, Union

import numpy as np

from ..errors import UnsupportedParameters
from ..levy import (CompoundPoissonModel, GaussianModel, LevyModel, StableModel, VarianceGammaModel,
                    stable_case)

Shape = Union[int, Tuple[int, ...]]


class IncrementSampler(abc.ABC):
    reflectable: bool = False
    """ Whether the law is symmetric about its drift, so antithetic pairs are valid """

    def __init__(self, model: LevyModel):
        self.model = model

    @property
    def brownian_coefficient(self) -> Optional[float]:
        """ A of a pure Brownian law, None when the increments jump """
        return None

    @property
    def drift(self) -> float:
        return 0.0

    @abc.abstractmethod
    def _centred(self, rng: np.random.Generator, shape: Shape, dt: float) -> np.ndarray:
        pass

    def sample(self, rng: np.random.Generator, shape: Shape, dt: float, antithetic: bool = False) -> np.ndarray:
        if not antithetic:
            return self.drift * dt + self._centred(rng, shape, dt)

        size = int(np.prod(shape))
        if size % 2:
            raise ValueError('antithetic sampling needs an even number of samples')
        half = self._centred(rng, size // 2, dt)
        return (self.drift * dt + np.concatenate([half, -half])).reshape(shape)


class GaussianSampler(IncrementSampler):
    reflectable = True

    def __init__(self, model: LevyModel, A: float, drift: float):
        super().__init__(model)
        self.A = A
        self._drift = drift

    @property
    def brownian_coefficient(self) -> Optional[float]:
        return self.A

    @property
    def drift(self) -> float:
        return self._drift

    def _centred(self, rng, shape, dt):
        return math.sqrt(self.A * dt) * rng.standard_normal(shape)


class StableSampler(IncrementSampler):
    def __init__(self, model: StableModel):
        super().__init__(model)
        stable_case(model.alpha, model.beta)
        self.alpha = model.alpha
        self.beta = model.beta
        self.reflectable = model.beta == 0.0

        if self.alpha != 1.0:
            zeta = self.beta * math.tan(0.5 * math.pi * self.alpha)
            self._shift = math.atan(zeta) / self.alpha
            self._factor = (1.0 + zeta * zeta) ** (0.5 / self.alpha)

    @property
    def drift(self) -> float:
        return self.model.drift_offset

    def unit(self, rng: np.random.Generator, shape: Shape) -> np.ndarray:
        """ Unit-scale draws with E exp(izX) = exp(-lambda(z)) """
        v = rng.uniform(-0.5 * np.pi, 0.5 * np.pi, shape)
        if self.alpha == 1.0:
            return np.tan(v)
        w = rng.standard_exponential(shape)
        a, b = self.alpha, self._shift
        return self._factor * np.sin(a * (v + b)) / np.cos(v) ** (1.0 / a) \
            * (np.cos(v - a * (v + b)) / w) ** ((1.0 - a) / a)

    def _centred(self, rng, shape, dt):
        return (self.model.scale * dt) ** (1.0 / self.alpha) * self.unit(rng, shape)


class CompoundPoissonSampler(IncrementSampler):
    def __init__(self, model: CompoundPoissonModel):
        super().__init__(model)
        self.reflectable = model.symmetric

    @property
    def drift(self) -> float:
        return self.model.gamma

    def _centred(self, rng, shape, dt):
        counts = rng.poisson(self.model.mass * dt, shape)
        flat = counts.ravel()
        total = int(flat.sum())
        jumps = self.model.inverse_cdf(rng.uniform(0.0, 1.0, total))
        owner = np.repeat(np.arange(flat.size), flat)
        summed = np.bincount(owner, weights=jumps, minlength=flat.size).reshape(counts.shape)
        if self.model.A > 0.0:
            summed = summed + math.sqrt(self.model.A * dt) * rng.standard_normal(shape)
        return summed


class VarianceGammaSampler(IncrementSampler):
    """ Difference of two gamma processes, rates M (up) and G (down) """

    def __init__(self, model: VarianceGammaModel):
        super().__init__(model)
        self.reflectable = model.symmetric

    @property
    def drift(self) -> float:
        return self.model.uncompensated_drift()

    def _centred(self, rng, shape, dt):
        m = self.model
        up = rng.gamma(m.C2 * dt, 1.0 / m.M, shape)
        down = rng.gamma(m.C1 * dt, 1.0 / m.G, shape)
        x = up - down
        if m.A > 0.0:
            x = x + math.sqrt(m.A * dt) * rng.standard_normal(shape)
        return x


def sampler_for(model: LevyModel) -> IncrementSampler:
    if isinstance(model, GaussianModel):
        return GaussianSampler(model, model.A, model.gamma)
    if isinstance(model, StableModel):
        if model.is_wiener:
            return GaussianSampler(model, model.scale, model.drift_offset)
        return StableSampler(model)
    if isinstance(model, CompoundPoissonModel):
        return CompoundPoissonSampler(model)
    if isinstance(model, VarianceGammaModel):
        return VarianceGammaSampler(model)
    raise UnsupportedParameters(
            f'no exact increment sampler for {model.name}: Monte Carlo covers gaussian, stable, '
            f'compound_poisson and variance_gamma; use the spectral route for this model')


def sample_increment(model: LevyModel, dt: float, rng: np.random.Generator, size: Optional[Shape] = None):
    """ One increment (or an array of `size`) of the process over a step dt """
    if dt <= 0.0:
        raise UnsupportedParameters(f'time step must be positive, got {dt}')
    values = sampler_for(model).sample(rng, 1 if size is None else size, dt)
    return float(values[0]) if size is None else values
