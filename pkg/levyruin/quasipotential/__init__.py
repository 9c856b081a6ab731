""" quasipotential module

    Quasi-potential kernels Phi(x, y) on an interval: closed forms for
    Brownian motion and stable processes, the shift reduction to a
    symmetric interval, the general construction from the operator S,
    grid-backed kernels and the majorant check.
"""

from .base import QuasiPotentialKernel, ShiftReduction, shift_to_symmetric
from .wiener import WienerGreenKernel, wiener_green
from .stable import (CaseOneConstants, CauchyKernel, StableCaseOneKernel, StableOneSidedKernel, KAC_SCALE,
                     case_one_constants, cauchy_kernel, solve_rho, stable_kernel_case1, stable_kernel_onesided)
from .grid import GridBacked
from .construction import (ConstructionData, GeneralConstruction, JacobiBasis, density_exponent, diagonal_class,
                           general_construction)
from .closed_form import closed_form_kernel, quasipotential_for
from .majorant import MajorantReport, cross_section_maximum, majorant_check
