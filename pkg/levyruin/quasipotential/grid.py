""" grid.py

    Quasi-potential stored as a matrix on a tensor grid and evaluated by
    bilinear interpolation. Cells with an infinite corner (the diagonal of
    a singular kernel) average their finite corners.
"""

from typing import Any, List, Optional

import numpy as np

from ..errors import MalformedInput
from ..types import FloatArray, Singularity
from .base import QuasiPotentialKernel


class GridBacked(QuasiPotentialKernel):
    kind = 'grid'

    def __init__(self, grid: FloatArray, values: np.ndarray, diagonal_singularity: str = Singularity.NONE,
                 diagonal_exponent: float = 0.0, conditioning: Optional[float] = None,
                 boundary_residual: Optional[float] = None, construction: Optional[Any] = None,
                 symmetric: bool = False, warnings: Optional[List[str]] = None):
        grid = np.asarray(grid, dtype=float)
        values = np.asarray(values, dtype=float)
        if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0.0):
            raise MalformedInput('the quasi-potential grid must be strictly increasing with at least 2 points')
        if values.shape != (grid.size, grid.size):
            raise MalformedInput(f'Phi must be a {grid.size}x{grid.size} matrix, got {values.shape}')
        if np.any(np.isnan(values)):
            raise MalformedInput('Phi contains NaN')
        super().__init__(grid[0], grid[-1], diagonal_singularity, diagonal_exponent, symmetric)
        self.grid = grid
        self.values = values
        self.conditioning = conditioning
        self.boundary_residual = boundary_residual
        self.construction = construction
        self.warnings = warnings or []

    @property
    def n(self) -> int:
        return self.grid.size

    def _locate(self, x: np.ndarray):
        index = np.clip(np.searchsorted(self.grid, x, side='right') - 1, 0, self.n - 2)
        left = self.grid[index]
        return index, (x - left) / (self.grid[index + 1] - left)

    def _evaluate(self, x, y):
        i, tx = self._locate(x)
        j, ty = self._locate(y)
        corners = np.stack((self.values[i, j], self.values[i + 1, j], self.values[i, j + 1], self.values[i + 1, j + 1]))
        weights = np.stack(((1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty))

        finite = np.isfinite(corners)
        total = np.sum(np.where(finite, corners, 0.0) * weights, axis=0)
        mass = np.sum(np.where(finite, weights, 0.0), axis=0)
        exact = np.all(finite, axis=0)
        with np.errstate(divide='ignore', invalid='ignore'):
            averaged = np.where(mass > 0.0, total / mass, np.inf)
        return np.where(exact, total, averaged)

    def describe(self) -> dict:
        return {**super().describe(), 'n': self.n, 'diagonal_exponent': self.diagonal_exponent,
                'conditioning': self.conditioning, 'boundary_residual': self.boundary_residual}

    def shifted(self, offset: float) -> 'GridBacked':
        """ The same kernel on the domain moved by `offset`, Phi(x, y) -> Phi(x - offset, y - offset) """
        return GridBacked(self.grid + offset, self.values, self.diagonal_singularity, self.diagonal_exponent,
                          self.conditioning, self.boundary_residual, self.construction, self.symmetric,
                          list(self.warnings))
