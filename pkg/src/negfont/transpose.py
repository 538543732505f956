"""Density operators, global and K-way partial transposes, negativities.

Matrix elements are classified by the Hamming distance h between row and
column basis labels and by whether the labels differ on the transposed
qubit. The K-way transpose (K > 2) swaps qubit p's bits only in elements
with h == K that differ on p; K == 2 also takes the h == 1 elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .eigen import HERMITIAN_TOL, hermitian_eigenvalues
from .errors import BadK, NotHermitian, WrongArity
from .state import PureState, check_qubit


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    entries: np.ndarray = field(repr=False)
    hermitian: bool = False

    def __post_init__(self):
        m = np.array(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise WrongArity(f"operator must be square, got shape {m.shape}")
        if self.hermitian and np.abs(m - m.conj().T).max() >= HERMITIAN_TOL:
            raise NotHermitian("operator flagged Hermitian but is not")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_qubits(self) -> int:
        return int(round(np.log2(self.dim)))

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.entries))


@dataclass(frozen=True)
class NegativityResult:
    qubit: int
    kind: str | int  # "global" or K
    value: float
    eigenvalues: tuple[float, ...]


def density_matrix(state: PureState) -> OperatorMatrix:
    psi = state.amplitudes
    rho = np.outer(psi, psi.conj())
    # exact Hermiticity despite rounding in the outer product
    rho = 0.5 * (rho + rho.conj().T)
    return OperatorMatrix(rho, hermitian=True)


def _labels(dim: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(dim)
    return idx[:, None], idx[None, :]


def _p_mask(n: int, p: int) -> int:
    return 1 << (n - p)


def _transposed_entries(rho: np.ndarray, n: int, p: int, select: np.ndarray) -> np.ndarray:
    """Copy of rho where selected elements take rho[i ^ m, j ^ m] (bit p swapped)."""
    rows, cols = _labels(rho.shape[0])
    m = _p_mask(n, p)
    out = rho.copy()
    src_r = np.broadcast_to(rows ^ m, rho.shape)[select]
    src_c = np.broadcast_to(cols ^ m, rho.shape)[select]
    out[select] = rho[src_r, src_c]
    return out


def _classify(n: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    rows, cols = _labels(2**n)
    x = rows ^ cols
    hamming = np.zeros(x.shape, dtype=int)
    for bit in range(n):
        hamming += (x >> bit) & 1
    differs_on_p = (x & _p_mask(n, p)) != 0
    return hamming, differs_on_p


def partial_transpose_global(rho: OperatorMatrix, p: int) -> OperatorMatrix:
    n = rho.n_qubits
    p = check_qubit(p, n)
    _, differs = _classify(n, p)
    return OperatorMatrix(_transposed_entries(rho.entries, n, p, differs), hermitian=rho.hermitian)


def partial_transpose_kway(rho: OperatorMatrix, p: int, k: int) -> OperatorMatrix:
    n = rho.n_qubits
    p = check_qubit(p, n)
    if not isinstance(k, (int, np.integer)) or not 2 <= k <= n:
        raise BadK(f"K must be in [2, {n}], got {k!r}")
    hamming, differs = _classify(n, p)
    if k == 2:
        select = differs & ((hamming == 1) | (hamming == 2))
    else:
        select = differs & (hamming == k)
    return OperatorMatrix(_transposed_entries(rho.entries, n, p, select), hermitian=rho.hermitian)


def partial_transpose(rho: OperatorMatrix, p: int, kind: str | int = "global") -> OperatorMatrix:
    if kind == "global":
        return partial_transpose_global(rho, p)
    return partial_transpose_kway(rho, p, kind)


def negativity(state: PureState, p: int, kind: str | int = "global") -> NegativityResult:
    """Trace-norm negativity ``sum |lambda| - 1`` of the chosen partial transpose."""
    pt = partial_transpose(density_matrix(state), p, kind)
    evals = hermitian_eigenvalues(pt.entries)
    value = float(np.sum(np.abs(evals)) - np.sum(evals).real)
    return NegativityResult(int(p), kind, max(value, 0.0), tuple(float(e) for e in evals))


def reduced_qubit_density(state: PureState, p: int) -> np.ndarray:
    p = check_qubit(p, state.n_qubits)
    t = np.moveaxis(state.tensor(), p - 1, 0).reshape(2, -1)
    return t @ t.conj().T


def reduced_qubit_linear_entropy(state: PureState, p: int) -> float:
    """2 (1 - tr rho_p^2) for the single-qubit reduced state of qubit p."""
    r = reduced_qubit_density(state, p)
    return float(2.0 * (1.0 - np.trace(r @ r).real))


def check_pt_decomposition(state: PureState, p: int) -> float:
    """Max residual of rho_G^Tp - sum_K rho_K^Tp + (N-2) rho."""
    n = state.n_qubits
    if n < 3:
        raise WrongArity("decomposition check needs N >= 3")
    rho = density_matrix(state)
    kway_sum = sum(partial_transpose_kway(rho, p, k).entries for k in range(2, n + 1))
    total = partial_transpose_global(rho, p).entries - kway_sum + (n - 2) * rho.entries
    return float(np.abs(total).max())
