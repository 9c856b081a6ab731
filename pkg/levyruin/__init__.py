""" levyruin module

    Confinement (ruin) probabilities of one-dimensional Levy processes
    through quasi-potential integral operators. Subpackages follow the
    pipeline: models, generator kernels, quasi-potentials, spectra, and
    the two reference oracles.
"""

from .consts import VERSION

__version__ = VERSION
