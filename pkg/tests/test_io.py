import json
import math

import numpy as np
import pytest

from levyruin.errors import MalformedInput
from levyruin.io import (RunManifest, load_manifest, manifest_path, read_kernel_dump, read_phi_grid,
                         read_survival_curve, read_table, spectrum_document, write_kernel_dump, write_manifest,
                         write_phi_grid, write_spectrum, write_survival_curve, write_table)
from levyruin.io.tables import float_column
from levyruin.kernels import build_kernel
from levyruin.quasipotential import CauchyKernel, StableCaseOneKernel, WienerGreenKernel
from levyruin.types import Singularity


def test_table_keeps_header_and_floats(tmp_path):
    filename = str(tmp_path / 'table.csv')
    values = [0.1, 1.0 / 3.0, math.pi, 1e-300]
    write_table(filename, {'name': 'check', 'n': 4}, ('i', 'v'), enumerate(values))

    header, columns, rows = read_table(filename)
    assert header == {'name': 'check', 'n': 4}
    assert columns == ['i', 'v']
    assert float_column(rows, 1) == values


def test_table_errors(tmp_path):
    with pytest.raises(MalformedInput, match='does not exist'):
        read_table(str(tmp_path / 'missing.csv'))

    bare = tmp_path / 'bare.csv'
    bare.write_text('x,y\n1,2\n')
    with pytest.raises(MalformedInput, match='JSON header'):
        read_table(str(bare))

    broken = tmp_path / 'broken.csv'
    broken.write_text('# {not json\n# x,y\n1,2\n')
    with pytest.raises(MalformedInput, match='malformed JSON header'):
        read_table(str(broken))

    ragged = tmp_path / 'ragged.csv'
    ragged.write_text('# {}\n# x,y\n1,2\n3\n')
    with pytest.raises(MalformedInput, match='2 fields'):
        read_table(str(ragged))

    words = tmp_path / 'words.csv'
    words.write_text('# {}\n# x,y\n1,two\n')
    _, _, rows = read_table(str(words))
    with pytest.raises(MalformedInput, match='non-numeric'):
        float_column(rows, 1)


def test_phi_grid_of_closed_form(tmp_path):
    filename = str(tmp_path / 'phi.csv')
    kernel = WienerGreenKernel(-1.0, 1.0)
    write_phi_grid(filename, kernel, n=9)

    header, columns, _ = read_table(filename)
    assert columns == ['x', 'y', 'phi']
    assert header['kind'] == kernel.kind
    assert header['domain'] == [-1.0, 1.0]
    assert header['n'] == 9

    grid = read_phi_grid(filename)
    nodes = np.linspace(-1.0, 1.0, 9)
    assert np.array_equal(grid.grid, nodes)
    assert np.array_equal(grid.values, kernel(nodes[:, None], nodes[None, :]))
    assert grid.diagonal_singularity == Singularity.NONE


def test_phi_grid_marks_log_diagonal(tmp_path):
    filename = str(tmp_path / 'cauchy.csv')
    write_phi_grid(filename, CauchyKernel(-1.0, 1.0), n=5)
    grid = read_phi_grid(filename)

    assert grid.diagonal_singularity == Singularity.LOG
    assert np.all(np.isinf(np.diag(grid.values)[1:-1]))
    assert np.all(np.isfinite(grid.values[np.triu_indices(5, 1)]))
    assert np.allclose(grid.values, grid.values.T)


def test_phi_grid_size_mismatch(tmp_path):
    filename = str(tmp_path / 'short.csv')
    write_table(filename, {'n': 3}, ('x', 'y', 'phi'), [(0.0, 0.0, 1.0)])
    with pytest.raises(MalformedInput, match='3x3'):
        read_phi_grid(filename)


def test_kernel_dump(tmp_path, stable15, logger):
    filename = str(tmp_path / 'k.csv')
    kernel = build_kernel(stable15, logger)
    ys = [-2.0, -0.5, 0.25, 1.0, 3.0]
    write_kernel_dump(filename, kernel, ys)

    dump = read_kernel_dump(filename)
    assert dump.y == ys
    assert dump.k == list(kernel(np.array(ys)))
    assert dump.singularity == Singularity.POWER
    assert dump.A_half == kernel.A_half


def test_kernel_dump_needs_its_header(tmp_path):
    filename = str(tmp_path / 'k.csv')
    write_table(filename, {'singularity': 'none'}, ('y', 'k'), [(1.0, 1.0)])
    with pytest.raises(MalformedInput, match='A_half'):
        read_kernel_dump(filename)


def test_spectrum_document(tmp_path, wiener_dec):
    filename = str(tmp_path / 'spectrum.json')
    write_spectrum(filename, wiener_dec, 'wiener')
    with open(filename) as f:
        document = json.load(f)

    assert document == spectrum_document(wiener_dec, 'wiener')
    assert document['n'] == 256
    assert len(document['eigenvalues']) == 10
    assert document['lambda1'] == pytest.approx(8.0 / math.pi ** 2, abs=1e-6)
    assert document['c1'] == pytest.approx(4.0 / math.pi, abs=1e-5)
    assert all(abs(z['im']) < 1e-12 for z in document['eigenvalues'])


def test_survival_curve(tmp_path):
    filename = str(tmp_path / 'curve.csv')
    times = [0.5, 1.0, 2.0]
    write_survival_curve(filename, times, [0.9, 0.6, 0.3], 'oracle', header={'lambda1': 0.81})

    curve = read_survival_curve(filename)
    assert curve.times == times
    assert curve.values == [0.9, 0.6, 0.3]
    assert curve.methods == ['oracle'] * 3
    assert curve.errors == [0.0] * 3
    assert curve.header == {'lambda1': 0.81}


def test_survival_curve_rejects_other_tables(tmp_path):
    filename = str(tmp_path / 'phi.csv')
    write_phi_grid(filename, WienerGreenKernel(-1.0, 1.0), n=3)
    with pytest.raises(MalformedInput, match='not a survival curve'):
        read_survival_curve(filename)


def test_manifest_path():
    assert manifest_path('runs/series.csv') == 'runs/series.manifest.json'
    assert manifest_path('spectrum.json') == 'spectrum.manifest.json'


def test_manifest_round_trip(tmp_path):
    filename = str(tmp_path / 'run.manifest.json')
    manifest = RunManifest(command='survive', argv=['survive', 'model.json', '--method', 'oracle'],
                           model={'kind': 'gaussian', 'A': 1.0}, domain=[-1.0, 1.0],
                           parameters={'method': 'oracle'}, outputs={'curve': 'survival.csv'})
    write_manifest(filename, manifest)

    loaded = load_manifest(filename)
    assert loaded == manifest
    assert loaded.output('curve') == 'survival.csv'
    with pytest.raises(MalformedInput, match='no spectrum output'):
        loaded.output('spectrum')


@pytest.mark.parametrize('text, message', [
    ('', 'empty'),
    ('   \n', 'empty'),
    ('{"command": ', 'malformed'),
    ('{"argv": []}', 'malformed'),
    ('{"command": "kernel", "argv": [], "schema_version": 99}', 'newer'),
])
def test_manifest_rejections(tmp_path, text, message):
    filename = tmp_path / 'bad.manifest.json'
    filename.write_text(text)
    with pytest.raises(MalformedInput, match=message):
        load_manifest(str(filename))


def test_missing_manifest(tmp_path):
    with pytest.raises(MalformedInput, match='does not exist'):
        load_manifest(str(tmp_path / 'nothing.json'))


def test_phi_grid_header_is_plain_json(tmp_path):
    filename = str(tmp_path / 'stable.csv')
    kernel = StableCaseOneKernel(1.5, 0.0, -1.0, 1.0)
    write_phi_grid(filename, kernel, n=7)

    header, _, _ = read_table(filename)
    assert header['symmetric'] is True
    assert header['kind'] == 'stable-case1'
    assert header['diagonal_singularity'] == Singularity.NONE
    assert read_phi_grid(filename).values.shape == (7, 7)


def test_table_header_takes_numpy_scalars(tmp_path):
    filename = str(tmp_path / 'numpy.csv')
    write_table(filename, {'flag': np.bool_(True), 'value': np.float64(0.25), 'count': np.int64(3)}, ('x',), [])
    header, _, _ = read_table(filename)
    assert header == {'flag': True, 'value': 0.25, 'count': 3}
