""" closed_form.py

    Picks the closed-form quasi-potential matching a model, when one
    exists: Brownian motion and strictly stable processes in the
    admissible parameter cases.
"""

from logging import Logger
from typing import Optional

from ..errors import UnsupportedParameters
from ..kernels import build_kernel
from ..log import get_logger
from ..levy import LevyModel, GaussianModel, StableModel
from ..levy.stable import stable_case, unit_constant_sum
from .base import QuasiPotentialKernel, shift_to_symmetric
from .construction import general_construction
from .stable import StableCaseOneKernel, StableOneSidedKernel, CauchyKernel
from .wiener import WienerGreenKernel


def closed_form_kernel(model: LevyModel, lower: float, upper: float) -> QuasiPotentialKernel:
    if isinstance(model, GaussianModel):
        if model.drift != 0.0:
            raise UnsupportedParameters('the Wiener Green function needs a driftless Brownian motion')
        return WienerGreenKernel(lower, upper, model.A)

    if not isinstance(model, StableModel):
        raise UnsupportedParameters(f'no closed-form quasi-potential for {model.name}, use the general construction')

    if model.is_wiener:
        if model.gamma:
            raise UnsupportedParameters('the Wiener Green function needs a driftless Brownian motion')
        return WienerGreenKernel(lower, upper, model.scale)

    if model.drift_offset != 0.0:
        raise UnsupportedParameters('closed-form stable quasi-potentials need a strictly stable process')

    C1, C2 = model.levy_constants
    beta = (C2 - C1) / (C1 + C2)
    scale = (C1 + C2) / unit_constant_sum(model.alpha)
    case = stable_case(model.alpha, beta)
    if case == 'I':
        return StableCaseOneKernel(model.alpha, beta, lower, upper, scale)
    if case == 'II':
        return StableOneSidedKernel(model.alpha, beta, lower, upper, scale)
    return CauchyKernel(lower, upper, scale)


def quasipotential_for(model: LevyModel, lower: float, upper: float, method: str = 'auto', n: int = 512,
                       logger: Optional[Logger] = None) -> QuasiPotentialKernel:
    """
    Closed form when one exists ('closed'), the general construction on
    the symmetric interval moved onto [lower, upper] ('general'), or the
    former with a fall back to the latter ('auto').
    """
    if method not in ('auto', 'closed', 'general'):
        raise UnsupportedParameters(f'unknown quasi-potential method {method}')
    if method != 'general':
        try:
            return closed_form_kernel(model, lower, upper)
        except UnsupportedParameters:
            if method == 'closed' or isinstance(model, StableModel):
                raise

    logger = logger or get_logger('quasipotential')
    logger.info(f'No closed form for {model.name}, running the general construction')
    reduction = shift_to_symmetric(lower, upper)
    grid = general_construction(build_kernel(model, logger), reduction.c, n, logger)
    return grid.shifted(0.5 * (lower + upper)) if reduction.delta != 0.0 else grid
