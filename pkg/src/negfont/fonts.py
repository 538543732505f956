"""Negativity fonts of a pure state and the two-qubit M/T/I/P invariants.

A font for transposed qubit p pairs two complement bitstrings I < J (the
bits of every qubit except p). Its determinant is

    a[p=0, I] a[p=1, J] - a[p=1, I] a[p=0, J]

and K = 1 + hamming(I, J) counts the qubits on which the two columns differ.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import IncompleteAssignment, OverlappingSets, SameQubit, WrongArity
from .state import PureState, check_qubit

LIST_MIN_ABS = 1e-12


@dataclass(frozen=True)
class FontRecord:
    transposed_qubit: int
    left_index: str
    right_index: str
    k_value: int
    det: complex

    def label(self) -> str:
        """Determinant in subscript/superscript notation, e.g. ``D_{(A3)0(A4)0}^{00}``."""
        return font_label(self.transposed_qubit, self.left_index, self.right_index)


@dataclass(frozen=True)
class PairInvariantSet:
    m_value: float
    t_value: complex
    i_value: complex
    p_value: complex
    context: tuple

    def as_tuple(self) -> tuple[float, complex, complex, complex]:
        return (self.m_value, self.t_value, self.i_value, self.p_value)


def _others(n: int, p: int) -> list[int]:
    return [q for q in range(1, n + 1) if q != p]


def font_label(p: int, left: str, right: str) -> str:
    n = len(left) + 1
    subs, sup = [], []
    for q, bi, bj in zip(_others(n, p), left, right):
        if bi == bj:
            subs.append(f"(A{q}){bi}")
    for q in range(1, n + 1):
        if q == p:
            sup.append("0")
            continue
        k = _others(n, p).index(q)
        if left[k] != right[k]:
            sup.append(left[k])
    sub = "_{" + "".join(subs) + "}" if subs else ""
    return f"D{sub}^{{{''.join(sup)}}}"


def _font_det_tensor(t: np.ndarray, p: int, base: Mapping[int, int], fixed: Mapping[int, int]) -> complex:
    """Unchecked determinant on a raw amplitude tensor (1-based labels)."""
    n = t.ndim

    def index(p_bit: int, flip: bool):
        idx = [0] * n
        idx[p - 1] = p_bit
        for q, b in fixed.items():
            idx[q - 1] = b
        for q, b in base.items():
            idx[q - 1] = 1 - b if flip else b
        return tuple(idx)

    return complex(t[index(0, False)] * t[index(1, True)] - t[index(1, False)] * t[index(0, True)])


def font_det(
    state: PureState,
    p: int,
    flipped,
    base_bits: Mapping[int, int],
    fixed_bits: Mapping[int, int] | None = None,
) -> complex:
    """Determinant of the font with transposed qubit ``p``.

    ``flipped`` are the qubits (other than p) whose bits differ between the two
    columns; ``base_bits`` gives their bits in the left column and
    ``fixed_bits`` the bits of every remaining qubit. K = len(flipped) + 1.
    """
    n = state.n_qubits
    p = check_qubit(p, n)
    flipped = {check_qubit(q, n) for q in flipped}
    fixed_bits = dict(fixed_bits or {})
    if not flipped:
        raise IncompleteAssignment("flipped set must be nonempty")
    if p in flipped or p in fixed_bits or flipped & set(fixed_bits):
        raise OverlappingSets("transposed, flipped and fixed qubits must be disjoint")
    if set(base_bits) != flipped:
        raise IncompleteAssignment("base_bits must cover exactly the flipped qubits")
    if set(fixed_bits) | flipped | {p} != set(range(1, n + 1)):
        raise IncompleteAssignment("fixed_bits must cover every qubit outside flipped and p")
    for b in list(base_bits.values()) + list(fixed_bits.values()):
        if b not in (0, 1):
            raise IncompleteAssignment(f"bit value {b!r} is not 0 or 1")
    return _font_det_tensor(state.tensor(), p, base_bits, fixed_bits)


def _complement_rows(state: PureState, p: int) -> tuple[np.ndarray, np.ndarray]:
    t = np.moveaxis(state.tensor(), p - 1, 0).reshape(2, -1)
    return t[0], t[1]


def _pair_dets(state: PureState, p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All I < J determinants as flat arrays (rows, cols, dets)."""
    a0, a1 = _complement_rows(state, p)
    full = np.outer(a0, a1) - np.outer(a1, a0)
    rows, cols = np.triu_indices(a0.size, k=1)
    return rows, cols, full[rows, cols]


def enumerate_fonts(state: PureState, p: int, min_abs: float = LIST_MIN_ABS) -> list[FontRecord]:
    """Every font of the partial transpose on ``p`` with ``|det| > min_abs``, sorted by (K, I, J)."""
    n = state.n_qubits
    p = check_qubit(p, n)
    rows, cols, dets = _pair_dets(state, p)
    keep = np.abs(dets) > min_abs
    records = []
    for i, j, d in zip(rows[keep], cols[keep], dets[keep]):
        k = 1 + bin(int(i) ^ int(j)).count("1")
        records.append(
            FontRecord(p, format(int(i), f"0{n - 1}b"), format(int(j), f"0{n - 1}b"), k, complex(d))
        )
    records.sort(key=lambda r: (r.k_value, r.left_index, r.right_index))
    return records


def font_census(state: PureState, p: int, min_abs: float = LIST_MIN_ABS) -> dict[int, int]:
    """Number of surviving fonts per K for transposed qubit ``p`` (K = 2..N, zeros included)."""
    counts = Counter(r.k_value for r in enumerate_fonts(state, p, min_abs))
    return {k: counts.get(k, 0) for k in range(2, state.n_qubits + 1)}


def negativity_sq_from_fonts(state: PureState, p: int) -> float:
    """Squared global negativity of qubit p as 4 * sum |det|^2 over all fonts."""
    p = check_qubit(p, state.n_qubits)
    _, _, dets = _pair_dets(state, p)
    return float(4.0 * np.sum(np.abs(dets) ** 2))


def mtip_dets(state: PureState, p: int, q: int, rest: Mapping[int, int]) -> tuple[complex, complex, complex, complex]:
    """(D0, D1, E0, E1): the two N-way and two (N-1)-way determinants used by M/T/I/P.

    D_b flips every qubit except p with q = b in the left column; E_b keeps q
    fixed at b and flips everything else.
    """
    n = state.n_qubits
    p, q = check_qubit(p, n), check_qubit(q, n)
    if p == q:
        raise SameQubit(f"p and q are both A{p}")
    if n < 3:
        raise WrongArity("M/T/I/P need at least three qubits")
    rest = dict(rest)
    if set(rest) != set(range(1, n + 1)) - {p, q}:
        raise IncompleteAssignment("rest must assign every qubit except p and q")
    flipped_all = set(rest) | {q}
    d0 = font_det(state, p, flipped_all, {**rest, q: 0})
    d1 = font_det(state, p, flipped_all, {**rest, q: 1})
    e0 = font_det(state, p, set(rest), rest, {q: 0})
    e1 = font_det(state, p, set(rest), rest, {q: 1})
    return d0, d1, e0, e1


def pair_invariants_MTIP(state: PureState, p: int, q: int, rest: Mapping[int, int]) -> PairInvariantSet:
    d0, d1, e0, e1 = mtip_dets(state, p, q, rest)
    m = abs(d0) ** 2 + abs(d1) ** 2 + abs(e0) ** 2 + abs(e1) ** 2
    t = d0 - d1
    i = (d0 + d1) ** 2 - 4 * e0 * e1
    pp = d0 * d1 - e0 * e1
    return PairInvariantSet(m, t, i, pp, (p, q, tuple(sorted(dict(rest).items()))))
