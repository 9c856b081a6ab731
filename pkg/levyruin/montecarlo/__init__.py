""" montecarlo module

    Independent stochastic oracle: exact increment samplers and a
    block-parallel path simulator for confinement, conditional
    confinement and one-sided hitting probabilities.
"""

from .config import MCEstimate, SimConfig
from .samplers import (CompoundPoissonSampler, GaussianSampler, IncrementSampler, StableSampler,
                       VarianceGammaSampler, sample_increment, sampler_for)
from .engine import (MonteCarloEngine, Region, block_generator, dt_ladder, estimate_conditional_survival,
                     estimate_hitting_survival, estimate_survival, steps_for)
