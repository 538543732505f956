"""Cyclic Jacobi diagonalization of complex Hermitian matrices.

Each sweep visits every off-diagonal pair once using a round-robin
(tournament) ordering: a step rotates n/2 disjoint index pairs at the same
time, which lets numpy apply them as a single batched update.
"""

from __future__ import annotations

import numpy as np

from .errors import NoConvergence, NotHermitian

HERMITIAN_TOL = 1e-12
CONVERGENCE_TOL = 1e-13
MAX_SWEEPS = 100


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """n-1 rounds of disjoint pairs covering all index pairs (n even)."""
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        ps, qs = [], []
        for k in range(n // 2):
            a, b = players[k], players[n - 1 - k]
            ps.append(min(a, b))
            qs.append(max(a, b))
        rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def check_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix of shape {m.shape} is not square")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - m.conj().T).max(initial=0.0) > tol * scale:
        raise NotHermitian("matrix is not Hermitian")


def jacobi_eigh(
    m,
    tol: float = CONVERGENCE_TOL,
    max_sweeps: int = MAX_SWEEPS,
    vectors: bool = True,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.

    Iterates until the off-diagonal Frobenius norm is at most
    ``tol * ||m||_F``. Raises NoConvergence after ``max_sweeps`` sweeps.
    """
    a = np.array(m, dtype=complex)
    check_hermitian(a)
    n0 = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    # pad odd dimensions with a decoupled zero row/column
    n = n0 + (n0 % 2)
    if n != n0:
        a = np.pad(a, ((0, 1), (0, 1)))
    v = np.eye(n, dtype=complex) if vectors else None
    scale = np.linalg.norm(a)
    threshold = tol * scale
    tiny = max(scale * 1e-18, 1e-300)
    rounds = _round_robin(n) if n > 1 else []

    sweeps = 0
    while _off_norm(a) > threshold:
        if sweeps >= max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for ps, qs in rounds:
            apq = a[ps, qs]
            r = np.abs(apq)
            active = r > tiny
            if not active.any():
                continue
            ps_a, qs_a, apq, r = ps[active], qs[active], apq[active], r[active]
            phase = apq / r
            app = a[ps_a, ps_a].real
            aqq = a[qs_a, qs_a].real
            theta = (aqq - app) / (2.0 * r)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(1.0, theta))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t**2)
            s = t * c
            # rotation block [[c, s*phase], [-s*conj(phase), c]] on columns (p, q)
            sp = s * phase
            col_p = a[:, ps_a].copy()
            col_q = a[:, qs_a].copy()
            a[:, ps_a] = c * col_p - s * np.conj(phase) * col_q
            a[:, qs_a] = sp * col_p + c * col_q
            row_p = a[ps_a, :].copy()
            row_q = a[qs_a, :].copy()
            a[ps_a, :] = c[:, None] * row_p - (s * phase)[:, None] * row_q
            a[qs_a, :] = (s * np.conj(phase))[:, None] * row_p + c[:, None] * row_q
            a[ps_a, qs_a] = 0.0
            a[qs_a, ps_a] = 0.0
            if v is not None:
                vp = v[:, ps_a].copy()
                vq = v[:, qs_a].copy()
                v[:, ps_a] = c * vp - s * np.conj(phase) * vq
                v[:, qs_a] = sp * vp + c * vq

    # the padding coordinate is never rotated (its couplings are exactly zero)
    evals = np.diag(a).real[:n0]
    if v is not None:
        v = v[:n0, :n0]
    order = np.argsort(evals, kind="stable")
    evals = evals[order]
    if v is not None:
        v = v[:, order]
    return evals, v


def hermitian_eigenvalues(m) -> np.ndarray:
    return jacobi_eigh(m, vectors=False)[0]
