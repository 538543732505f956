"""Negativity fonts, partial transposes and four-qubit local-unitary invariants."""

from .catalog import preset, render_table1, render_table2, report, run_selftest
from .eigen import hermitian_eigenvalues, jacobi_eigh
from .fonts import enumerate_fonts, font_det, negativity_sq_from_fonts, pair_invariants_MTIP
from .invariants4 import beta4, delta4, full_report, i6_a2a3, j4, t4, tau4, triple_invariants
from .lu import canonicalize_chi, invariance_sweep, predict_font_transform, u_from_x
from .state import PureState, SingleQubitUnitary, apply_single_qubit_unitary, make_state, random_state
from .transpose import density_matrix, negativity, partial_transpose

__all__ = [
    "PureState", "SingleQubitUnitary", "apply_single_qubit_unitary", "make_state", "random_state",
    "enumerate_fonts", "font_det", "negativity_sq_from_fonts", "pair_invariants_MTIP",
    "density_matrix", "negativity", "partial_transpose", "jacobi_eigh", "hermitian_eigenvalues",
    "t4", "tau4", "j4", "beta4", "delta4", "i6_a2a3", "triple_invariants", "full_report",
    "u_from_x", "predict_font_transform", "invariance_sweep", "canonicalize_chi",
    "preset", "report", "render_table1", "render_table2", "run_selftest",
]
