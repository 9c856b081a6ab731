import math

import numpy as np
import pytest

from levyruin.domain import SampledFunction
from levyruin.errors import MalformedInput, UnsupportedParameters
from levyruin.kernels import apply_generator, build_kernel
from levyruin.quasipotential import (CauchyKernel, GeneralConstruction, GridBacked, density_exponent, diagonal_class,
                                     general_construction, quasipotential_for)
from levyruin.spectral import assemble
from levyruin.types import Singularity

KAC_VALUE = 0.5 * math.log(2.0 + math.sqrt(3.0))


@pytest.fixture(scope='module')
def cauchy_grid(cauchy, logger):
    return general_construction(build_kernel(cauchy, logger), 1.0, 129, logger)


def test_end_point_exponents(cauchy, stable15, gaussian, logger):
    assert density_exponent(build_kernel(cauchy, logger)) == -0.5
    assert density_exponent(build_kernel(stable15, logger)) == pytest.approx(-0.25)
    assert density_exponent(build_kernel(gaussian, logger)) == 0.0


def test_diagonal_classes():
    assert diagonal_class(-0.5) == (Singularity.LOG, 0.0)
    assert diagonal_class(-0.25) == (Singularity.NONE, 0.0)
    kind, exponent = diagonal_class(-0.75)
    assert kind == Singularity.POWER
    assert exponent == pytest.approx(0.5)


def test_variance_gamma_is_rejected(variance_gamma, logger):
    with pytest.raises(UnsupportedParameters):
        general_construction(build_kernel(variance_gamma, logger), 1.0, 65, logger)


def test_grid_needs_three_points(cauchy, logger):
    with pytest.raises(MalformedInput):
        general_construction(build_kernel(cauchy, logger), 1.0, 2, logger)


def test_cauchy_construction_matches_kac(cauchy_grid):
    assert isinstance(cauchy_grid, GridBacked)
    assert cauchy_grid.diagonal_singularity == Singularity.LOG
    data = cauchy_grid.construction
    assert data.phi(0.0, 0.5) == pytest.approx(KAC_VALUE, rel=1e-3)
    assert cauchy_grid(0.0, 0.5) == pytest.approx(KAC_VALUE, rel=1e-2)

    closed = CauchyKernel(-1.0, 1.0)
    for x, y in ((-0.5, 0.25), (0.25, -0.75), (0.5, 0.875)):
        assert cauchy_grid(x, y) == pytest.approx(closed(x, y), rel=1e-2)


def test_cauchy_densities_are_closed_form(cauchy_grid):
    # S N1 = 1 and S N2 = x are solved by (1 - x^2)^{-1/2} and x (1 - x^2)^{-1/2}
    data = cauchy_grid.construction
    x = np.array([-0.6, 0.0, 0.3, 0.8])
    root = np.sqrt(1.0 - x ** 2)
    C = 2.0 / math.pi ** 2
    assert data.N(1, x) == pytest.approx(1.0 / (C * math.pi * math.log(2.0) * root), rel=1e-4)
    assert data.N(2, x) == pytest.approx(x / (C * math.pi * root), rel=1e-4, abs=1e-10)
    assert data.r == pytest.approx(1.0 / (C * math.log(2.0)), rel=1e-4)


def test_q_antisymmetry(cauchy_grid):
    data = cauchy_grid.construction
    for x, y in ((0.3, -0.2), (0.7, 0.1), (-0.4, -0.5)):
        assert data.q(x, y) == pytest.approx(-data.q(-y, -x), rel=1e-12, abs=1e-14)


def test_grid_boundary_and_sign(cauchy_grid):
    grid = cauchy_grid.grid
    assert np.all(cauchy_grid.values[0] == 0.0)
    assert np.all(cauchy_grid.values[:, -1] == 0.0)
    off = ~np.eye(grid.size, dtype=bool)
    assert np.all(cauchy_grid.values[off] >= -1e-8)
    assert cauchy_grid.boundary_residual < 1e-3


def test_general_route_on_a_shifted_interval(cauchy, logger):
    kernel = quasipotential_for(cauchy, -0.5, 1.5, method='general', n=129, logger=logger)
    assert kernel.lower == pytest.approx(-0.5)
    assert kernel.upper == pytest.approx(1.5)
    assert kernel(0.5, 1.0) == pytest.approx(KAC_VALUE, rel=1e-2)
    assert kernel(0.5, 1.0) == pytest.approx(CauchyKernel(-0.5, 1.5)(0.5, 1.0), rel=1e-2)


def test_auto_prefers_the_closed_form(gaussian, logger):
    assert quasipotential_for(gaussian, -1.0, 1.0, logger=logger).kind == 'wiener'


@pytest.mark.parametrize('c', [0.5, 1.0, 1.5])
def test_cauchy_collocation_on_several_intervals(cauchy, logger, c):
    data = GeneralConstruction(logger).solve(build_kernel(cauchy, logger), c)
    assert np.isfinite(data.condition)
    assert data.phi(0.0, 0.5 * c) == pytest.approx(CauchyKernel(-c, c)(0.0, 0.5 * c), rel=1e-3)


def test_fine_cauchy_grid_matches_kac(cauchy, logger):
    kernel = general_construction(build_kernel(cauchy, logger), 1.0, 512, logger)
    closed = CauchyKernel(-1.0, 1.0)
    rng = np.random.default_rng(4)
    pairs = rng.uniform(-0.9, 0.9, size=(400, 2))
    pairs = pairs[np.abs(pairs[:, 0] - pairs[:, 1]) >= 0.1][:100]
    assert len(pairs) == 100
    for x, y in pairs:
        assert kernel(x, y) == pytest.approx(closed(x, y), rel=1e-2)


def test_green_function_inverts_the_generator(gaussian, wiener_system):
    grid = np.linspace(-1.0, 1.0, 201)
    f = (1.0 - grid ** 2) ** 3
    nodes = wiener_system.nodes
    Bf = wiener_system.interpolate(wiener_system.matrix @ (1.0 - nodes ** 2) ** 3, grid)

    LBf = apply_generator(gaussian, SampledFunction(grid, Bf))
    inner = np.abs(grid) <= 0.9
    assert np.max(np.abs(-LBf.values - f)[inner]) < 1e-3


@pytest.mark.parametrize('fixture', ['cauchy', 'stable15', 'onesided15'])
def test_quasipotential_inverts_the_generator(request, fixture):
    # B (-L g) = g for g supported inside the interval; B f itself is not
    # smooth at the end points, so the identity is checked in this order
    model = request.getfixturevalue(fixture)
    system = assemble(quasipotential_for(model, -1.0, 1.0, 'closed'), 128)
    nodes = system.nodes
    g = np.where(np.abs(nodes) < 0.6, (1.0 - (nodes / 0.6) ** 2) ** 4, 0.0)

    Lg = apply_generator(model, SampledFunction(nodes, g, boundary_class=True))
    recovered = system.matrix @ -Lg.values
    inner = np.abs(nodes) <= 0.8
    assert np.max(np.abs(recovered - g)[inner]) < 2e-3
