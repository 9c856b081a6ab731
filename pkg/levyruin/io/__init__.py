""" io module

    Plain CSV/JSON outputs of the pipeline and their readers, plus run
    manifests.
"""

from .tables import read_table, write_table
from .exports import (KernelDump, SurvivalCurve, phi_grid_values, read_kernel_dump, read_phi_grid,
                      read_survival_curve, spectrum_document, write_kernel_dump, write_phi_grid, write_spectrum,
                      write_survival_curve)
from .manifest import RunManifest, load_manifest, manifest_path, write_manifest
