""" regularity.py

    Report-only diagnostics of a discretized quasi-potential: sign and
    boundary values of Phi, the numerical range of B, the eigenvalue disk
    |z - lambda1/2| <= lambda1/2, conjugate symmetry of the spectrum and
    the index of eigenvalues on the disk boundary.
"""

from typing import List, Optional

import numpy as np

from pydantic import BaseModel

from .eigen import SpectralDecomposition
from .nystrom import NystromSystem

DISK_TOLERANCE = 1e-6
PAIR_TOLERANCE = 1e-8


class RegularityReport(BaseModel):
    min_phi: float
    max_boundary: float
    sector_half_angle: float
    n_trials: int
    disk_ok: bool
    max_disk_excess: float
    """ max over eigenvalues of (|z - lambda1/2| - lambda1/2) / lambda1 """
    unit_radius_disk_ok: bool
    """ The same check with radius 1/2 instead of lambda1/2 """
    boundary_eigenvalues: List[complex] = []
    boundary_index_ok: bool = True
    conjugate_pairs: bool = True
    real_spectrum: bool = True
    warnings: List[str] = []


def _conjugate_closed(values: np.ndarray, scale: float) -> bool:
    for z in values[np.abs(values.imag) > PAIR_TOLERANCE * scale]:
        if np.min(np.abs(values - np.conj(z))) > PAIR_TOLERANCE * scale * 10.0:
            return False
    return True


def regularity_report(system: NystromSystem, dec: SpectralDecomposition, n_trials: int = 200,
                      seed: int = 0, complex_trials: bool = True) -> RegularityReport:
    kernel = system.kernel
    nodes = system.nodes
    with np.errstate(divide='ignore', invalid='ignore'):
        phi = np.asarray(kernel(nodes[:, None], nodes[None, :]), dtype=float)
    off_diagonal = ~np.eye(system.n, dtype=bool) & np.isfinite(phi)
    min_phi = float(np.min(phi[off_diagonal]))

    boundary = np.abs(kernel.boundary_values(nodes))
    max_boundary = float(np.max(boundary[np.isfinite(boundary)], initial=0.0))
    residual = getattr(kernel, 'boundary_residual', None)
    if residual is not None:
        max_boundary = max(max_boundary, float(residual))

    rng = np.random.default_rng(seed)
    angle = 0.0
    for _ in range(n_trials):
        f = rng.standard_normal(system.n)
        if complex_trials:
            f = f + 1j * rng.standard_normal(system.n)
        form = complex(np.sum(system.weights * (system.matrix @ f) * np.conj(f)))
        if form != 0.0:
            angle = max(angle, abs(float(np.angle(form))))

    warnings: List[str] = []
    lambda1 = dec.lambda1
    spectrum = dec.spectrum
    excess = (np.abs(spectrum - 0.5 * lambda1) - 0.5 * lambda1) / lambda1
    max_excess = float(np.max(excess))
    disk_ok = max_excess <= DISK_TOLERANCE
    unit_ok = bool(np.all(np.abs(spectrum - 0.5 * lambda1) <= 0.5 * (1.0 + DISK_TOLERANCE)))
    if disk_ok != unit_ok:
        warnings.append('the disk check depends on the radius convention: lambda1/2 and 1/2 disagree')

    on_boundary = np.abs(excess) <= DISK_TOLERANCE
    on_boundary[0] = False
    boundary_values = [complex(z) for z in spectrum[on_boundary]]
    defective = set(dec.defective)
    boundary_index_ok = not any(z in defective for z in boundary_values)
    if not boundary_index_ok:
        warnings.append('an eigenvalue on the disk boundary has index > 1')

    scale = abs(spectrum[0])
    real_spectrum = bool(np.all(np.abs(spectrum.imag) <= PAIR_TOLERANCE * scale))
    conjugate = _conjugate_closed(spectrum, scale)
    if angle >= 0.5 * np.pi:
        warnings.append(f'numerical range reaches arg {angle:.4f}, B is not sectorial on these trials')

    return RegularityReport(min_phi=min_phi, max_boundary=max_boundary, sector_half_angle=angle, n_trials=n_trials,
                            disk_ok=disk_ok, max_disk_excess=max_excess, unit_radius_disk_ok=unit_ok,
                            boundary_eigenvalues=boundary_values, boundary_index_ok=boundary_index_ok,
                            conjugate_pairs=conjugate, real_spectrum=real_spectrum, warnings=warnings)
