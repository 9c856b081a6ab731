""" spectral module

    Nystrom discretization of B = (-L_Delta)^{-1}, its eigen-decomposition,
    survival series and asymptotics, the resolvent route, stable scaling
    and regularity diagnostics.
"""

from .nystrom import NystromAssembler, NystromSystem, assemble
from .eigen import EigenSolver, SpectralDecomposition, eigensystem, richardson
from .survival import (SurvivalEstimate, conditional_asymptotics, conditional_series, default_terms,
                       laplace_transform, leading_asymptotics, survival_asymptotic, survival_series)
from .resolvent import laplace_from_resolvent, resolvent_psi
from .scaling import Regime, RegimeLimit, regime_classify, rescaled_time, stable_index, stable_scaling
from .regularity import RegularityReport, regularity_report
