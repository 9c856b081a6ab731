""" consts.py

    Package-wide constants. Tunables that users may change live in the root
    `config.py` and reach the package through function arguments.
"""

from os import path

ROOT_DIR = path.dirname(path.dirname(path.abspath(__file__)))

LOGGER_NAME = 'levyruin'
VERSION = '0.1.0'
MANIFEST_SCHEMA_VERSION = 1

# Adaptive quadrature
QUAD_EPSABS = 1e-12
QUAD_EPSREL = 1e-10
DEFAULT_QUAD_LIMIT = 200

# Fourier inversion of the transition density: e^{-t Re lambda} below this
# at the cut-off frequency
DENSITY_TAIL_CUTOFF = 1e-12
DENSITY_MAX_FREQUENCY = 1e8

# Monte Carlo
DEFAULT_EXIT_BUDGET = 2_000_000_000
DEFAULT_BLOCK_SIZE = 4096
