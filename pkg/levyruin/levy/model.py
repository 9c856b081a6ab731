""" model.py

    Base class for Levy process models. A model is an immutable Levy
    triplet (A, gamma, nu') tagged with the name of its density family.
    Concrete families live next to this file, one per module.

    Characteristic exponent convention:
        E exp(i z X_t) = exp(-t lambda(z))
        lambda(z) = A z^2 / 2 - i gamma z
                    + int (1 - e^{izy} + izy 1_{|y|<=1}) nu'(y) dy
    Families with a finite Levy measure may drop the compensator, see
    `LevyModel.compensated`.
"""

import abc
import math

from typing import Optional

import numpy as np

from pydantic import BaseModel, ConfigDict, Field

from ..errors import DomainError
from ..quadrature import Quadrature
from ..types import FloatArray, Real


class LevyModel(BaseModel, abc.ABC):
    model_config = ConfigDict(frozen=True, extra='forbid')

    A: float = Field(0.0, ge=0.0)
    gamma: float = 0.0

    @abc.abstractmethod
    def density(self, y: Real) -> FloatArray:
        """ Levy density nu'(y), vectorised; the value at y = 0 is unspecified """
        pass

    @property
    @abc.abstractmethod
    def small_jump_index(self) -> Optional[float]:
        """
        Exponent a0 with nu'(y) ~ |y|^{-a0-1} as y -> 0, or None when the
        density is bounded near the origin.
        """
        pass

    @property
    @abc.abstractmethod
    def tail_index(self) -> float:
        """ Exponent a with nu'(y) ~ |y|^{-a-1} at infinity, inf for exponential decay """
        pass

    @property
    def has_jumps(self) -> bool:
        return True

    @property
    def gaussian_coefficient(self) -> float:
        return self.A

    @property
    def compensated(self) -> bool:
        """ Whether lambda carries the 1_{|y|<=1} compensator """
        return True

    @property
    def symmetric(self) -> bool:
        return False

    @property
    def drift(self) -> float:
        """ The gamma of the triplet as used in lambda """
        return self.gamma

    @property
    def mass(self) -> Optional[float]:
        """ Total mass of the Levy measure when finite """
        return None

    @property
    def name(self) -> str:
        return getattr(self, 'kind', type(self).__name__)

    def levy_density(self, y: Real):
        """ nu'(y) with the y = 0 domain check """
        arr = np.asarray(y, dtype=float)
        if np.any(arr == 0.0):
            raise DomainError('the Levy density is not defined at y = 0')
        values = self.density(arr)
        return float(values) if np.ndim(values) == 0 else values

    def characteristic_exponent(self, z: float) -> complex:
        z = float(z)
        if z == 0.0:
            return 0j
        gauss = 0.5 * self.gaussian_coefficient * z * z
        return complex(gauss, -self.drift * z) + self.jump_exponent(z)

    def jump_exponent(self, z: float) -> complex:
        return self.numeric_jump_exponent(z)

    def numeric_jump_exponent(self, z: float) -> complex:
        """
        Jump part of lambda(z) by adaptive quadrature, split at the origin
        and at |y| = 1. Oscillatory tails use the QUADPACK Fourier rule.
        """
        z = float(z)
        if z == 0.0 or not self.has_jumps:
            return 0j
        if z < 0.0:
            return self.numeric_jump_exponent(-z).conjugate()

        real, imag = 0.0, 0.0
        for side in (1.0, -1.0):
            def nu(u, s=side):
                return float(self.density(s * u))

            real += Quadrature.adaptive(lambda u: 2.0 * math.sin(0.5 * z * u) ** 2 * nu(u), 0.0, 1.0,
                                        what='lambda: small jumps, real part')
            real += Quadrature.adaptive(nu, 1.0, np.inf, what='lambda: tail mass') \
                - Quadrature.adaptive(nu, 1.0, np.inf, what='lambda: cosine tail', weight='cos', wvar=z)

            if self.compensated:
                def odd(u):
                    return (math.sin(z * u) - z * u) * nu(u)
            else:
                def odd(u):
                    return math.sin(z * u) * nu(u)

            tail = Quadrature.adaptive(nu, 1.0, np.inf, what='lambda: sine tail', weight='sin', wvar=z)
            imag -= side * (Quadrature.adaptive(odd, 0.0, 1.0, what='lambda: small jumps, imaginary part') + tail)

        return complex(real, imag)

    def moment(self, power: int, lo: float, hi: float) -> float:
        """ Signed moment int_{lo <= |y| <= hi} y^power nu'(y) dy over both half-lines """
        total = 0.0
        for side in (1.0, -1.0):
            total += side ** power * Quadrature.adaptive(
                    lambda u, s=side: u ** power * float(self.density(s * u)), lo, hi,
                    what=f'moment of order {power}')
        return total

    def small_jump_moment(self) -> float:
        """ m0 = int_{|y|<=1} y nu'(y) dy, finite when the small-jump index is below one """
        return self.moment(1, 0.0, 1.0)

    def large_jump_moment(self) -> float:
        """ m1 = int_{|y|>1} y nu'(y) dy, finite when the tail index exceeds one """
        return self.moment(1, 1.0, np.inf)

    def uncompensated_drift(self) -> float:
        """ b with L f = A/2 f'' + b f' + int (f(x+y) - f(x)) nu'(y) dy """
        return self.drift - self.small_jump_moment() if self.compensated else self.drift

    def compensated_drift(self) -> float:
        """ b with L f = A/2 f'' + b f' + int (f(x+y) - f(x) - y f'(x)) nu'(y) dy """
        if self.compensated:
            return self.drift + self.large_jump_moment()
        return self.drift + self.small_jump_moment() + self.large_jump_moment()

    def descriptor(self) -> dict:
        return self.model_dump(mode='json')
