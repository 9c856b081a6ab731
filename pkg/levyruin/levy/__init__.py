""" levy module

    Levy process models: triplets, characteristic exponents, Levy
    densities, transition densities and integrability checks. One family
    per file, all deriving from `LevyModel`.
"""

from .model import LevyModel
from .stable import StableModel, stable_case, unit_constant_sum
from .gaussian import GaussianModel
from .damped_stable import DampedStableModel
from .variance_gamma import VarianceGammaModel
from .nig import NIGModel
from .meixner import MeixnerModel
from .compound_poisson import CompoundPoissonModel
from .custom import CustomModel
from .descriptor import ModelDescriptor, parse_model, loads_model, load_model, dump_model
from .density import DensityReport, transition_density, transition_density_report
from .validation import KernelRoute, ValidationReport, kernel_route, validate_model


def characteristic_exponent(model: LevyModel, z: float) -> complex:
    return model.characteristic_exponent(z)


def levy_density(model: LevyModel, y):
    return model.levy_density(y)
