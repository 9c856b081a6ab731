""" exports.py

    File formats of the pipeline outputs:
     - kernel dump: (y, k(y)) rows, header {A_half, singularity, gamma_shift}
     - Phi grid: (x, y, Phi) rows, header {kind, domain, n, conditioning}
     - spectrum: JSON {eigenvalues: [{re, im}], lambda1, c1, n, kernel_kind}
     - survival curve: (t, p, method, err) rows
"""

import json

from typing import List, Optional, Sequence

import numpy as np

from pydantic import BaseModel

from ..errors import MalformedInput
from ..kernels import ConvolutionKernel
from ..quasipotential import GridBacked, QuasiPotentialKernel
from ..spectral import SpectralDecomposition, leading_asymptotics
from ..types import FloatArray, Singularity
from .tables import float_column, read_table, write_table


class KernelDump(BaseModel):
    A_half: float
    singularity: str
    gamma_shift: float
    y: List[float]
    k: List[float]


class SurvivalCurve(BaseModel):
    times: List[float]
    values: List[float]
    methods: List[str]
    errors: List[float]
    header: dict = {}


def write_kernel_dump(filename: str, kernel: ConvolutionKernel, ys: Sequence[float]) -> str:
    ys = np.asarray(ys, dtype=float)
    header = {'A_half': float(kernel.A_half), 'singularity': str(kernel.singularity),
              'gamma_shift': float(kernel.gamma_shift), 'exponent': float(kernel.exponent),
              'route': str(kernel.route)}
    return write_table(filename, header, ('y', 'k'), zip(ys, np.atleast_1d(kernel(ys))))


def read_kernel_dump(filename: str) -> KernelDump:
    header, _, rows = read_table(filename)
    try:
        return KernelDump(A_half=header['A_half'], singularity=header['singularity'],
                          gamma_shift=header['gamma_shift'], y=float_column(rows, 0, filename),
                          k=float_column(rows, 1, filename))
    except KeyError as e:
        raise MalformedInput(f'{filename}: kernel dump header lacks {e}') from e


def _optional_float(value) -> Optional[float]:
    return None if value is None else float(value)


def phi_grid_values(kernel: QuasiPotentialKernel, grid: FloatArray) -> np.ndarray:
    with np.errstate(divide='ignore', invalid='ignore'):
        values = np.asarray(kernel(grid[:, None], grid[None, :]), dtype=float)
    if kernel.diagonal_singularity != Singularity.NONE:
        inner = np.arange(1, grid.size - 1)
        values[inner, inner] = np.inf
    return values


def write_phi_grid(filename: str, kernel: QuasiPotentialKernel, grid: Optional[FloatArray] = None,
                   n: int = 65) -> str:
    """ Phi on `grid` (the kernel's own grid when grid-backed, else n uniform points) """
    if grid is None:
        grid = kernel.grid if isinstance(kernel, GridBacked) else np.linspace(kernel.lower, kernel.upper, n)
    grid = np.asarray(grid, dtype=float)
    values = kernel.values if isinstance(kernel, GridBacked) and np.array_equal(grid, kernel.grid) \
        else phi_grid_values(kernel, grid)

    header = {'kind': kernel.kind, 'domain': [float(kernel.lower), float(kernel.upper)], 'n': int(grid.size),
              'conditioning': _optional_float(getattr(kernel, 'conditioning', None)),
              'boundary_residual': _optional_float(getattr(kernel, 'boundary_residual', None)),
              'diagonal_singularity': str(kernel.diagonal_singularity),
              'diagonal_exponent': float(kernel.diagonal_exponent), 'symmetric': bool(kernel.symmetric)}
    rows = ((grid[i], grid[j], values[i, j]) for i in range(grid.size) for j in range(grid.size))
    return write_table(filename, header, ('x', 'y', 'phi'), rows)


def read_phi_grid(filename: str) -> GridBacked:
    header, _, rows = read_table(filename)
    n = int(header.get('n', 0))
    if n < 2 or len(rows) != n * n:
        raise MalformedInput(f'{filename}: expected {n}x{n} rows, found {len(rows)}')
    x = np.array(float_column(rows, 0, filename)).reshape(n, n)
    values = np.array(float_column(rows, 2, filename)).reshape(n, n)
    return GridBacked(x[:, 0], values, header.get('diagonal_singularity', Singularity.NONE),
                      header.get('diagonal_exponent', 0.0), conditioning=header.get('conditioning'),
                      boundary_residual=header.get('boundary_residual'), symmetric=header.get('symmetric', False))


def spectrum_document(dec: SpectralDecomposition, kernel_kind: str) -> dict:
    lambda1, c1 = leading_asymptotics(dec)
    return {'eigenvalues': [{'re': float(z.real), 'im': float(z.imag)} for z in dec.eigenvalues],
            'lambda1': lambda1, 'c1': c1, 'n': dec.system.n, 'k': dec.k, 'kernel_kind': kernel_kind,
            'defective': [{'re': float(z.real), 'im': float(z.imag)} for z in dec.defective],
            'warnings': list(dec.warnings)}


def write_spectrum(filename: str, dec: SpectralDecomposition, kernel_kind: str) -> str:
    with open(filename, 'w') as f:
        json.dump(spectrum_document(dec, kernel_kind), f, indent=2)
    return filename


def write_survival_curve(filename: str, times: Sequence[float], values: Sequence[float], method: str,
                         errors: Optional[Sequence[float]] = None, header: Optional[dict] = None) -> str:
    errors = [0.0] * len(times) if errors is None else errors
    rows = ((t, p, method, err) for t, p, err in zip(times, values, errors))
    return write_table(filename, header or {}, ('t', 'p', 'method', 'err'), rows)


def read_survival_curve(filename: str) -> SurvivalCurve:
    header, columns, rows = read_table(filename)
    if columns != ['t', 'p', 'method', 'err']:
        raise MalformedInput(f'{filename} is not a survival curve (columns {columns})')
    return SurvivalCurve(times=float_column(rows, 0, filename), values=float_column(rows, 1, filename),
                         methods=[row[2] for row in rows], errors=float_column(rows, 3, filename), header=header)
