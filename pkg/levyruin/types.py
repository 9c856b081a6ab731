from typing import Callable, Union

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]
""" Real samples, usually on a grid """

ComplexArray = npt.NDArray[np.complex128]
""" Complex samples (characteristic exponents, eigenvectors) """

Real = Union[float, FloatArray]
""" Scalar or array input accepted by the vectorised evaluators """

KernelFn = Callable[[FloatArray], FloatArray]
""" Vectorised y -> k(y) of a convolution kernel """

PhiFn = Callable[[FloatArray, FloatArray], FloatArray]
""" Vectorised (x, y) -> Phi(x, y) of a quasi-potential """


class ExitCode:
    SUCCESS: int = 0
    VALIDATION_FAILED: int = 2
    MALFORMED_INPUT: int = 3
    UNSUPPORTED: int = 4
    NUMERICAL_FAILURE: int = 5


class Singularity:
    NONE: str = 'none'
    LOG: str = 'log'
    POWER: str = 'power'


class SurvivalMethod:
    SERIES: str = 'spectral-series'
    ASYMPTOTIC: str = 'asymptotic'
    RESOLVENT: str = 'resolvent'
    MONTE_CARLO: str = 'monte-carlo'
    ORACLE: str = 'oracle'
