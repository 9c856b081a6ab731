""" conftest.py

    Shared fixtures: the reference models, and the Wiener and Cauchy
    spectral pipelines, which several test modules reuse.
"""

import logging
import math

import pytest

from levyruin.levy import (CompoundPoissonModel, GaussianModel, MeixnerModel, NIGModel, StableModel,
                           VarianceGammaModel)
from levyruin.quasipotential import CauchyKernel, WienerGreenKernel
from levyruin.spectral import assemble, eigensystem

KAC_CAUCHY_SCALE = 2.0 / math.pi


@pytest.fixture(scope='session')
def logger() -> logging.Logger:
    return logging.getLogger('levyruin.tests')


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """ Run inside an empty directory so CLI outputs land there """
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture(scope='session')
def wiener() -> StableModel:
    return StableModel(alpha=2.0)


@pytest.fixture(scope='session')
def gaussian() -> GaussianModel:
    return GaussianModel(A=1.0)


@pytest.fixture(scope='session')
def cauchy() -> StableModel:
    """ Cauchy process in Kac's normalization """
    return StableModel(alpha=1.0, beta=0.0, scale=KAC_CAUCHY_SCALE)


@pytest.fixture(scope='session')
def stable15() -> StableModel:
    return StableModel(alpha=1.5, beta=0.0)


@pytest.fixture(scope='session')
def onesided15() -> StableModel:
    return StableModel(alpha=1.5, beta=1.0)


@pytest.fixture(scope='session')
def laplace_jumps() -> CompoundPoissonModel:
    """ nu'(y) = e^{-|y|}, total mass 2 """
    return CompoundPoissonModel(form='exponential', C=1.0, s=1.0)


@pytest.fixture(scope='session')
def variance_gamma() -> VarianceGammaModel:
    return VarianceGammaModel(C1=1.0, C2=1.0, G=1.0, M=1.0)


@pytest.fixture(scope='session')
def nig() -> NIGModel:
    return NIGModel(C=1.0, beta=0.3)


@pytest.fixture(scope='session')
def meixner() -> MeixnerModel:
    return MeixnerModel(C=1.0, beta=0.5)


@pytest.fixture(scope='session')
def wiener_system():
    return assemble(WienerGreenKernel(-1.0, 1.0), 256)


@pytest.fixture(scope='session')
def wiener_dec(wiener_system):
    return eigensystem(wiener_system, 10)


@pytest.fixture(scope='session')
def cauchy_system():
    return assemble(CauchyKernel(-1.0, 1.0), 256)


@pytest.fixture(scope='session')
def cauchy_dec(cauchy_system):
    return eigensystem(cauchy_system, 10)
