""" kernels module

    The factored generator L = D S D: construction of the convolution
    kernel of S, application of S and L to sampled functions, sectoriality
    diagnostics, and the compound Poisson potential.
"""

from .convolution import ConvolutionKernel, KernelBuilder, build_kernel, kernel_sign_check
from .operators import apply_S, apply_generator, spline_of
from .sector import SectorReport, random_trial_functions, sector_diagnostics, quadratic_form
from .potential import (PotentialKernel, PotentialBuilder, compound_poisson_potential, potential_kernel,
                        potential_residual, resolvent_symbols)
