"""Four-qubit polynomial invariants built from negativity-font determinants.

Unless stated otherwise qubit A1 is the transposed ("row") qubit of every
font. Notation used in this module:

* ``d[i2, i3, i4]``: four-way font with left column ``|0 i2 i3 i4>``.
* ``combo(q)``: four-way fonts with i2 = 0 summed with sign (-1)^{i_q}.
  ``combo`` of the pair (A1, Aq) enters J4 and I4; T4 uses sign (-1)^{i3+i4}.
* three-way fonts keep one qubit fixed and flip the other two; the
  "difference in the partner index" subtracts the font whose partner bit is 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import BadPair, BadRoles, WrongArity
from .fonts import _font_det_tensor
from .state import PureState, check_qubit
from .transpose import negativity

CONSISTENCY_TOL = 1e-10

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
COMPLEMENT = {(2, 3): (1, 4), (2, 4): (1, 3), (3, 4): (1, 2)}
# Table 2 roles: (partner q, mediator r, fixed s)
TABLE2_ROLES = ((2, 3, 4), (3, 2, 4), (4, 2, 3))


@dataclass(frozen=True)
class FourWaySet:
    d: Mapping[tuple[int, int, int], complex]

    def __getitem__(self, key):
        return self.d[tuple(key)]


@dataclass(frozen=True)
class TripleInvariantSet:
    pair: tuple[int, int]
    mediator: int
    fixed: int
    i3_slice0: complex
    i3_slice1: complex
    i3_overall: complex
    p3: complex
    i4: complex
    tau3_slice0: float
    tau3_slice1: float
    p3_direct: complex = 0j

    @property
    def label(self) -> str:
        """Table-style label: pair qubits, then mediator (e.g. ``A1A4A2``)."""
        return f"A{self.pair[0]}A{self.pair[1]}A{self.mediator}"


@dataclass(frozen=True)
class InvariantReport:
    t4: complex
    t4_sq: complex
    tau4: float
    j4: Mapping[tuple[int, int], complex]
    beta4: float
    beta4_pairs: Mapping[tuple[int, int], float]
    delta4_sum: float
    delta4_avg: float
    i6_a2a3: complex
    triples: tuple[TripleInvariantSet, ...]
    negativity_sq: tuple[float, ...]
    residuals: Mapping[str, float] = field(default_factory=dict)
    consistent: bool = True

    @property
    def negsq_avg(self) -> float:
        return float(np.mean(self.negativity_sq))


def _tensor4(state: PureState) -> np.ndarray:
    if state.n_qubits != 4:
        raise WrongArity(f"four-qubit invariant requested for a {state.n_qubits}-qubit state")
    return state.tensor()


def _font(t: np.ndarray, p: int, fixed: Mapping[int, int], base: Mapping[int, int]) -> complex:
    return _font_det_tensor(t, p, base, fixed)


def _others(*qubits: int) -> list[int]:
    return [q for q in (1, 2, 3, 4) if q not in qubits]


# ---- degree two -------------------------------------------------------------


def fourway_determinants(state: PureState) -> FourWaySet:
    t = _tensor4(state)
    d = {
        (i2, i3, i4): _font(t, 1, {}, {2: i2, 3: i3, 4: i4})
        for i2, i3, i4 in itertools.product((0, 1), repeat=3)
    }
    return FourWaySet(d)


def _combo(d: FourWaySet, q: int) -> complex:
    return sum((-1) ** (0, 0, i3, i4)[q - 1] * d[0, i3, i4] for i3 in (0, 1) for i4 in (0, 1))


def t4(state: PureState) -> complex:
    """D^{0000} + D^{0011} - D^{0010} - D^{0001}."""
    d = fourway_determinants(state)
    return d[0, 0, 0] + d[0, 1, 1] - d[0, 1, 0] - d[0, 0, 1]


def tau4(state: PureState) -> float:
    return float(4 * abs(t4(state) ** 2))


# ---- degree four: pair invariants J4 ----------------------------------------


def _normalize_pair(pair) -> tuple[int, int]:
    try:
        a, b = sorted(int(x) for x in pair)
    except (TypeError, ValueError):
        raise BadPair(f"{pair!r} is not a qubit pair") from None
    if (a, b) not in PAIRS:
        raise BadPair(f"{pair!r} is not a pair of distinct qubits in 1..4")
    return a, b


def _three_way_diff(t: np.ndarray, q: int, held: int, held_bit: int) -> complex:
    """Three-way font with ``held`` fixed, difference taken in partner ``q``.

    The third flipped qubit sits at bit 0 in both terms.
    """
    (other,) = _others(1, q, held)
    return _font(t, 1, {held: held_bit}, {other: 0, q: 0}) - _font(t, 1, {held: held_bit}, {other: 0, q: 1})


def _two_way(t: np.ndarray, q: int, fixed: Mapping[int, int]) -> complex:
    """Two-way font flipping A1 and ``q``; every other qubit fixed."""
    return _font(t, 1, fixed, {q: 0})


def j4(state: PureState, pair) -> complex:
    """Degree-four invariant J4 for a qubit pair.

    For (A1, Aq) with the two remaining qubits r < s:

        combo(q)^2 + 8 (G00 G11 + G01 G10) - 4 W_r(0) W_r(1) - 4 W_s(0) W_s(1)

    with G_xy the two-way fonts at (i_r, i_s) = (x, y) and W_u(b) the
    three-way difference with qubit u held at b. A pair without A1 takes the
    value of its complementary pair.
    """
    t = _tensor4(state)
    a, b = _normalize_pair(pair)
    if a != 1:
        a, b = COMPLEMENT[(a, b)]
    q = b
    r, s = _others(1, q)
    combo = _combo(fourway_determinants(state), q)
    g = {(x, y): _two_way(t, q, {r: x, s: y}) for x in (0, 1) for y in (0, 1)}
    w = {(u, v): _three_way_diff(t, q, u, v) for u in (r, s) for v in (0, 1)}
    return (
        combo**2
        + 8 * (g[0, 0] * g[1, 1] + g[0, 1] * g[1, 0])
        - 4 * w[r, 0] * w[r, 1]
        - 4 * w[s, 0] * w[s, 1]
    )


def j4_all(state: PureState) -> dict[tuple[int, int], complex]:
    return {pair: j4(state, pair) for pair in PAIRS}


def beta4(state: PureState) -> tuple[float, dict[tuple[int, int], float]]:
    """Mean over the six pairs of (4/3)|J4|, plus the per-pair values."""
    pairs = {pair: 4.0 / 3.0 * abs(value) for pair, value in j4_all(state).items()}
    return float(sum(pairs.values()) / 6.0), pairs


def negativity_squares(state: PureState) -> tuple[float, ...]:
    return tuple(negativity(state, p).value ** 2 for p in range(1, state.n_qubits + 1))


def delta4(state: PureState, negativity_sq: tuple[float, ...] | None = None) -> tuple[float, float]:
    """(sum form, average form) of squared negativities minus tau4."""
    _tensor4(state)
    if negativity_sq is None:
        negativity_sq = negativity_squares(state)
    total = float(sum(negativity_sq))
    tau = tau4(state)
    return total - tau, total / 4.0 - tau


# ---- three-qubit subsystem invariants ----------------------------------------


def _slice_fonts(b: np.ndarray) -> tuple[dict, dict]:
    """W[z] and G[y] of a three-qubit tensor ordered (A1, mediator, partner)."""

    def det(c0, c1):
        return b[(0,) + c0] * b[(1,) + c1] - b[(1,) + c0] * b[(0,) + c1]

    w = {z: det((0, z), (1, 1 - z)) for z in (0, 1)}
    g = {y: det((y, 0), (y, 1)) for y in (0, 1)}
    return w, g


def three_qubit_i3(b: np.ndarray) -> complex:
    """(W0 - W1)^2 - 4 G0 G1 for a three-qubit tensor ordered (A1, mediator, partner)."""
    w, g = _slice_fonts(np.asarray(b))
    return (w[0] - w[1]) ** 2 - 4 * g[0] * g[1]


def _check_roles(q: int, mediator: int, fixed: int) -> None:
    roles = (q, mediator, fixed)
    for x in roles:
        check_qubit(x, 4)
    if sorted(roles) != [2, 3, 4]:
        raise BadRoles(f"partner, mediator and fixed qubits {roles} must be A2, A3, A4 in some order")


def triple_invariants(state: PureState, q: int, mediator: int, fixed: int) -> TripleInvariantSet:
    """Three-qubit invariants of subsystem {A1, Aq, A_mediator} sliced on ``fixed``.

    ``j4((1, q)) == i4 + p3`` for either choice of the fixed qubit.
    """
    t = _tensor4(state)
    _check_roles(q, mediator, fixed)
    # slice axes are (A1, remaining two ascending); reorder to (A1, mediator, partner)
    rest = sorted((q, mediator))
    order = (0, 1 + rest.index(mediator), 1 + rest.index(q))
    slices = [np.transpose(np.take(t, x, axis=fixed - 1), order) for x in (0, 1)]
    fonts = [_slice_fonts(b) for b in slices]
    i3 = [(w[0] - w[1]) ** 2 - 4 * g[0] * g[1] for w, g in fonts]
    w_sum = sum(w[0] - w[1] for w, _ in fonts)
    g0 = sum(g[0] for _, g in fonts)
    g1 = sum(g[1] for _, g in fonts)
    i3_overall = w_sum**2 - 4 * g0 * g1
    p3 = 2 * i3[0] + 2 * i3[1] - 2 * i3_overall

    # direct form: 8 (two-way cross products) - 4 (fixed-qubit three-way product)
    two = {(y, x): _two_way(t, q, {mediator: y, fixed: x}) for y in (0, 1) for x in (0, 1)}
    p3_direct = 8 * (two[0, 0] * two[1, 1] + two[0, 1] * two[1, 0]) - 4 * _three_way_diff(
        t, q, fixed, 0
    ) * _three_way_diff(t, q, fixed, 1)

    combo = _combo(fourway_determinants(state), q)
    i4 = combo**2 - 4 * _three_way_diff(t, q, mediator, 0) * _three_way_diff(t, q, mediator, 1)
    return TripleInvariantSet(
        pair=(1, q),
        mediator=mediator,
        fixed=fixed,
        i3_slice0=complex(i3[0]),
        i3_slice1=complex(i3[1]),
        i3_overall=complex(i3_overall),
        p3=complex(p3),
        i4=complex(i4),
        tau3_slice0=float(4 * abs(i3[0])),
        tau3_slice1=float(4 * abs(i3[1])),
        p3_direct=complex(p3_direct),
    )


# ---- degree six ---------------------------------------------------------------

# Superscripts of the eight three-way fonts in the sextic, in the order
# (A1-held, A4-held) for the four three-way lines.
SEXTIC_SUPERSCRIPTS = {
    # every difference taken in the A3 index; the only reading that is LU invariant
    "invariant": (("010", "001"), ("010", "001"), ("010", "001"), ("010", "001")),
    # as typeset
    "printed": (("100", "001"), ("010", "010"), ("010", "010"), ("010", "100")),
}


def notation_det(t: np.ndarray, p: int, subscripts: Mapping[int, int], superscript: str) -> complex:
    """Font determinant addressed the way the formulas write it.

    ``superscript`` gives the bits of every non-subscripted qubit in location
    order, the transposed qubit included. A 1 in the transposed position swaps
    the font's rows, i.e. negates the determinant.
    """
    free = [x for x in (1, 2, 3, 4) if x not in subscripts]
    bits = dict(zip(free, (int(c) for c in superscript)))
    sign = -1 if bits.pop(p) else 1
    return sign * _font(t, p, subscripts, bits)


def i6_a2a3(state: PureState, variant: str = "invariant") -> complex:
    """Degree-six invariant built from fonts of the partial transpose on A2.

    ``variant="printed"`` evaluates the superscripts exactly as typeset, which
    is not LU invariant; the default is the invariant reading.
    """
    t = _tensor4(state)
    sups = SEXTIC_SUPERSCRIPTS[variant]

    def two(x, y):
        return notation_det(t, 2, {1: x, 4: y}, "00")

    def held1(x, sup):
        return notation_det(t, 2, {1: x}, "000") - notation_det(t, 2, {1: x}, sup)

    def held4(y, sup):
        return notation_det(t, 2, {4: y}, "000") - notation_det(t, 2, {4: y}, sup)

    combo = sum(
        sign * notation_det(t, 2, {}, sup)
        for sign, sup in ((1, "0000"), (1, "0001"), (-1, "0010"), (-1, "0011"))
    )
    # (two-way font, A1-held bit, A4-held bit, sign) per three-way line
    lines = (((0, 1), 1, 0, 1), ((0, 0), 1, 1, -1), ((1, 0), 0, 1, 1), ((1, 1), 0, 0, -1))
    value = two(0, 0) * two(1, 1) * combo - two(0, 1) * two(1, 0) * combo
    for (two_xy, x1, y4, sign), (sup1, sup4) in zip(lines, sups):
        value += sign * two(*two_xy) * held1(x1, sup1) * held4(y4, sup4)
    return complex(value)


def sextic_deviation_report(state: PureState) -> dict[str, complex]:
    return {name: i6_a2a3(state, name) for name in SEXTIC_SUPERSCRIPTS}


# ---- aggregate ----------------------------------------------------------------


def full_report(state: PureState, negativity_sq: tuple[float, ...] | None = None) -> InvariantReport:
    _tensor4(state)
    t = t4(state)
    j = j4_all(state)
    b4, b4_pairs = beta4(state)
    if negativity_sq is None:
        negativity_sq = negativity_squares(state)
    d_sum, d_avg = delta4(state, negativity_sq)
    triples = tuple(triple_invariants(state, q, r, s) for q, r, s in TABLE2_ROLES)

    residuals = {
        "t4_sq_relation": abs(t**2 - (j[1, 2] + j[1, 3] + j[1, 4]) / 3),
    }
    for tr in triples:
        residuals[f"j4_split_{tr.label}"] = abs(j[tr.pair] - (tr.i4 + tr.p3))
        residuals[f"p3_forms_{tr.label}"] = abs(tr.p3 - tr.p3_direct)
    consistent = all(r < CONSISTENCY_TOL for r in residuals.values())
    return InvariantReport(
        t4=t,
        t4_sq=t**2,
        tau4=float(4 * abs(t**2)),
        j4=j,
        beta4=b4,
        beta4_pairs=b4_pairs,
        delta4_sum=d_sum,
        delta4_avg=d_avg,
        i6_a2a3=i6_a2a3(state),
        triples=triples,
        negativity_sq=tuple(negativity_sq),
        residuals=residuals,
        consistent=consistent,
    )
