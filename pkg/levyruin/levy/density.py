""" density.py

    Transition density rho(x, t) of X_t by Fourier inversion,

        rho(x, t) = (1 / pi) int_0^Z Re[e^{-ixz - t lambda(z)}] dz

    which uses lambda(-z) = conj(lambda(z)). The cut-off Z is doubled until
    e^{-t Re lambda(Z)} falls below DENSITY_TAIL_CUTOFF.
"""

import math

from dataclasses import dataclass

import numpy as np

from ..consts import DENSITY_TAIL_CUTOFF, DENSITY_MAX_FREQUENCY
from ..errors import DomainError, NonIntegrableTail
from ..quadrature import Quadrature
from .model import LevyModel


@dataclass
class DensityReport:
    value: float
    cutoff: float
    tail_bound: float
    """ Estimate of the neglected mass (1/pi) int_Z^{4Z} e^{-t Re lambda} """


def frequency_cutoff(model: LevyModel, t: float) -> float:
    if model.mass is not None and model.gaussian_coefficient == 0.0:
        raise NonIntegrableTail(
                f'{model.name} has a finite Levy measure and no Gaussian part, so X_t has an atom at its drift; '
                f'use the jump-chain representation instead of a density')

    target = -math.log(DENSITY_TAIL_CUTOFF)
    cutoff = 1.0
    while t * model.characteristic_exponent(cutoff).real < target:
        cutoff *= 2.0
        if cutoff > DENSITY_MAX_FREQUENCY:
            raise NonIntegrableTail(
                    f'e^(-t Re lambda) of {model.name} is still above {DENSITY_TAIL_CUTOFF:g} '
                    f'at |z| = {DENSITY_MAX_FREQUENCY:g}, t = {t}')
    return cutoff


def transition_density_report(model: LevyModel, x: float, t: float) -> DensityReport:
    if not t > 0.0:
        raise DomainError(f'time must be positive, got t = {t}')

    cutoff = frequency_cutoff(model, t)

    def integrand(z: float) -> float:
        return (np.exp(-1j * x * z - t * model.characteristic_exponent(z))).real

    # panels keep each piece of the oscillation resolvable for QUADPACK
    edges = np.linspace(0.0, cutoff, int(min(64, max(4, abs(x) * cutoff / math.pi))) + 1)
    value = sum(Quadrature.adaptive(integrand, lo, hi, what='Fourier inversion')
                for lo, hi in zip(edges[:-1], edges[1:])) / math.pi

    tail = Quadrature.adaptive(lambda z: math.exp(-t * model.characteristic_exponent(z).real),
                               cutoff, 4.0 * cutoff, what='Fourier inversion tail') / math.pi
    return DensityReport(max(value, 0.0), cutoff, tail)


def transition_density(model: LevyModel, x: float, t: float) -> float:
    """ rho(x, t), clipped at zero where quadrature noise dips below it """
    return transition_density_report(model, x, t).value
