""" resolvent.py

    psi(x, s) = (I + s B*)^{-1} Phi(0, x), whose integral over the domain
    is the Laplace transform int_0^inf e^{-st} p(t, D) dt. The discrete
    adjoint of B[i, j] = Phi(x_i, x_j) w_j is W^{-1} B^T W.
"""

from typing import Optional

import numpy as np
import scipy.linalg

from ..domain import SampledFunction
from ..errors import DomainError, SingularResolventError
from .eigen import SpectralDecomposition
from .nystrom import NystromSystem


def resolvent_psi(system: NystromSystem, s: float, dec: Optional[SpectralDecomposition] = None) -> SampledFunction:
    """ `dec` is accepted for symmetry with the series path and only checked for consistency """
    if s < 0.0:
        raise DomainError(f'the Laplace variable must be non-negative, got {s}')
    if dec is not None and dec.system is not system:
        raise DomainError('the decomposition belongs to a different Nystrom system')

    origin = system.origin_row()
    if s == 0.0:
        return SampledFunction(system.nodes, origin)

    w = system.weights
    adjoint = system.matrix.T * w[None, :] / w[:, None]
    operator = np.eye(system.n) + s * adjoint
    try:
        lu = scipy.linalg.lu_factor(operator, check_finite=True)
        psi = scipy.linalg.lu_solve(lu, origin)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise SingularResolventError(f'I + s B* is singular at s={s}: {e}')
    if not np.all(np.isfinite(psi)):
        raise SingularResolventError(f'I + s B* is singular at s={s}')
    return SampledFunction(system.nodes, psi)


def laplace_from_resolvent(system: NystromSystem, s: float) -> float:
    """ int psi(x, s) dx """
    return float(system.weights @ resolvent_psi(system, s).values)
