""" scaling.py

    Self-similarity of stable processes: on [-a, a] the eigenvalues of B
    are a^alpha times those on [-1, 1], and p(t, a) = p(t / a^alpha, 1).
    The regimes below follow from it when a depends on t.
"""

from typing import NamedTuple, Optional, Union

from ..errors import MalformedInput, UnsupportedParameters
from ..levy import LevyModel, GaussianModel, StableModel
from .eigen import SpectralDecomposition
from .survival import survival_series


class Regime:
    ESCAPE: str = 'limit-0'
    CONFINED: str = 'limit-1'
    BALANCED: str = 'limit-p(T)'


class RegimeLimit(NamedTuple):
    regime: str
    limit: Optional[float]


def _check_alpha(alpha: float):
    if not 0.0 < alpha <= 2.0:
        raise UnsupportedParameters(f'scaling needs a stable index in (0, 2], got {alpha}')


def stable_index(model: LevyModel) -> float:
    """ alpha of a self-similar model """
    if isinstance(model, StableModel):
        if model.drift_offset != 0.0:
            raise UnsupportedParameters('a drifted stable process is not self-similar')
        return model.alpha
    if isinstance(model, GaussianModel) and model.drift == 0.0:
        return 2.0
    raise UnsupportedParameters(f'{model.name} is not a strictly stable process')


def stable_scaling(lambda1_unit: float, a: float, alpha: float) -> float:
    """ lambda1 on [-a, a] from lambda1 on [-1, 1] """
    _check_alpha(alpha)
    if not a > 0.0:
        raise MalformedInput(f'half width must be positive, got {a}')
    return a ** alpha * lambda1_unit


def rescaled_time(t: float, a: float, alpha: float) -> float:
    """ t' with p(t, a) = p(t', 1) """
    _check_alpha(alpha)
    return t / a ** alpha


def regime_classify(alpha: float, ratio_limit: Union[str, float],
                    unit_dec: Optional[SpectralDecomposition] = None) -> RegimeLimit:
    """
    Limit of p(t, a(t)) when t / a(t)^alpha tends to infinity, zero or a
    finite T. The finite case is evaluated on the unit interval when its
    decomposition is given.
    """
    _check_alpha(alpha)
    if ratio_limit in ('infinity', 'inf', float('inf')):
        return RegimeLimit(Regime.ESCAPE, 0.0)
    if ratio_limit in ('zero', 0, 0.0):
        return RegimeLimit(Regime.CONFINED, 1.0)
    try:
        T = float(ratio_limit)
    except (TypeError, ValueError):
        raise MalformedInput(f'ratio limit must be "infinity", "zero" or a positive number, got {ratio_limit!r}')
    if not T > 0.0:
        raise MalformedInput(f'ratio limit must be positive, got {T}')
    if unit_dec is None:
        return RegimeLimit(Regime.BALANCED, None)
    return RegimeLimit(Regime.BALANCED, survival_series(unit_dec, T).values[0])
