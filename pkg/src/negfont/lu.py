"""Special-form local unitaries, predicted font transformations, invariance
sweeps and the canonicalization of the chi state."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from . import invariants4 as inv
from .errors import DegenerateFonts, NonFinite, UnknownQuantity, WrongArity
from .fonts import mtip_dets, pair_invariants_MTIP
from .state import (
    PureState,
    SingleQubitUnitary,
    apply_single_qubit_unitary,
    random_su2,
    random_u2,
)
from .transpose import negativity

RELATIVE_FLOOR = 1e-6
DEGENERATE_TOL = 1e-12


def u_from_x(x: complex) -> SingleQubitUnitary:
    """(1 + |x|^2)^(-1/2) [[1, -x*], [x, 1]]; determinant 1, identity at x = 0."""
    x = complex(x)
    if not cmath.isfinite(x):
        raise NonFinite(f"x = {x!r} is not finite")
    norm = np.sqrt(1.0 + abs(x) ** 2)
    return SingleQubitUnitary(np.array([[1, -x.conjugate()], [x, 1]], dtype=complex) / norm)


@dataclass(frozen=True)
class FontTransformPrediction:
    context: tuple
    x: complex
    original: tuple[complex, complex, complex, complex]
    predicted: tuple[complex, complex, complex, complex]
    direct: tuple[complex, complex, complex, complex]

    @property
    def max_error(self) -> float:
        return float(max(abs(a - b) for a, b in zip(self.predicted, self.direct)))


def predict_font_transform(
    state: PureState, p: int, q: int, rest: Mapping[int, int], x: complex
) -> FontTransformPrediction:
    """Fonts (D0, D1, E0, E1) after U(x) on qubit q, predicted from the originals.

    ``direct`` holds the same determinants recomputed on the transformed state.
    """
    d0, d1, e0, e1 = mtip_dets(state, p, q, rest)
    x = complex(x)
    xc = x.conjugate()
    n = 1.0 + abs(x) ** 2
    predicted = (
        (d0 - abs(x) ** 2 * d1 + x * e0 - xc * e1) / n,
        (d1 - abs(x) ** 2 * d0 + x * e0 - xc * e1) / n,
        (e0 + xc**2 * e1 - xc * (d0 + d1)) / n,
        (e1 + x**2 * e0 + x * (d0 + d1)) / n,
    )
    moved = apply_single_qubit_unitary(state, q, u_from_x(x))
    direct = mtip_dets(moved, p, q, rest)
    return FontTransformPrediction(
        (p, q, tuple(sorted(dict(rest).items()))), x, (d0, d1, e0, e1), predicted, direct
    )


# ---- invariance sweeps ---------------------------------------------------------

Quantity = Callable[[PureState, dict], complex]


def _negsq(state: PureState, cache: dict) -> tuple[float, ...]:
    if "negsq" not in cache:
        cache["negsq"] = tuple(negativity(state, p).value ** 2 for p in range(1, state.n_qubits + 1))
    return cache["negsq"]


def _j4(pair):
    return lambda s, c: inv.j4(s, pair)


def _triple(q, r, s_fixed, attr):
    return lambda s, c: getattr(inv.triple_invariants(s, q, r, s_fixed), attr)


QUANTITIES: dict[str, Quantity] = {
    "t4": lambda s, c: inv.t4(s),
    "t4_sq": lambda s, c: inv.t4(s) ** 2,
    "tau4": lambda s, c: inv.tau4(s),
    "beta4": lambda s, c: inv.beta4(s)[0],
    "delta4_avg": lambda s, c: inv.delta4(s, _negsq(s, c))[1],
    "delta4_sum": lambda s, c: inv.delta4(s, _negsq(s, c))[0],
    "i6": lambda s, c: inv.i6_a2a3(s),
    "i6_printed": lambda s, c: inv.i6_a2a3(s, "printed"),
}
for _a, _b in inv.PAIRS:
    QUANTITIES[f"j4_{_a}{_b}"] = _j4((_a, _b))
for _p in range(1, 11):
    QUANTITIES[f"negsq_{_p}"] = lambda s, c, _p=_p: _negsq(s, c)[_p - 1]
for _q, _r, _s in inv.TABLE2_ROLES:
    for _attr in ("i4", "p3", "i3_slice0", "i3_slice1", "i3_overall"):
        QUANTITIES[f"{_attr}_A1A{_q}A{_r}"] = _triple(_q, _r, _s, _attr)

# qubits whose local unitaries leave a subsystem quantity unchanged
SUBSYSTEM_QUBITS = {
    f"{attr}_A1A{q}A{r}": (1, q, r)
    for q, r, _ in inv.TABLE2_ROLES
    for attr in ("i4", "p3", "i3_slice0", "i3_slice1", "i3_overall")
}


def deviation(value: complex, reference: complex) -> float:
    """Relative deviation when |reference| > 1e-6, absolute otherwise."""
    diff = abs(complex(value) - complex(reference))
    ref = abs(complex(reference))
    return diff / ref if ref > RELATIVE_FLOOR else diff


def random_local_unitaries(n_qubits: int, seed: int, sample: int, group: str = "su2") -> list[SingleQubitUnitary]:
    """One Haar unitary per qubit; stream ``sample * n + (q - 1)`` keeps samples independent of order."""
    draw = {"su2": random_su2, "u2": random_u2}.get(group.lower())
    if draw is None:
        raise UnknownQuantity(f"unknown group {group!r}; use 'su2' or 'u2'")
    return [draw(seed, sample * n_qubits + q) for q in range(n_qubits)]


def invariance_sweep(
    state: PureState,
    quantity: str | Sequence[str],
    samples: int = 100,
    seed: int = 0,
    group: str = "su2",
    qubits: Sequence[int] | None = None,
) -> float | dict[str, float]:
    """Max deviation of the named quantities under random product unitaries.

    Each sample applies an independent Haar unitary from ``group`` to every
    qubit in ``qubits`` (default all). Returns a float for a single name and a
    name -> deviation mapping for a sequence.
    """
    names = [quantity] if isinstance(quantity, str) else list(quantity)
    for name in names:
        if name not in QUANTITIES:
            raise UnknownQuantity(f"unknown quantity {name!r}")
    n = state.n_qubits
    qubits = list(range(1, n + 1)) if qubits is None else [int(q) for q in qubits]

    def evaluate(s: PureState) -> dict[str, complex]:
        cache: dict = {}
        return {name: QUANTITIES[name](s, cache) for name in names}

    try:
        reference = evaluate(state)
    except WrongArity:
        raise UnknownQuantity(f"{names} not defined for {n}-qubit states") from None
    worst = {name: 0.0 for name in names}
    for k in range(samples):
        unitaries = random_local_unitaries(n, seed, k, group)
        moved = state
        for q in qubits:
            moved = apply_single_qubit_unitary(moved, q, unitaries[q - 1])
        values = evaluate(moved)
        for name in names:
            worst[name] = max(worst[name], deviation(values[name], reference[name]))
    return worst[names[0]] if isinstance(quantity, str) else worst


def mtip_invariance(
    state: PureState, p: int, q: int, rest: Mapping[int, int], xs: Sequence[complex], side: str = "q"
) -> float:
    """Largest change of (M, T, I, P) over U(x) applied to qubit p or q."""
    target = q if side == "q" else p
    base = pair_invariants_MTIP(state, p, q, rest).as_tuple()
    worst = 0.0
    for x in xs:
        moved = apply_single_qubit_unitary(state, target, u_from_x(x))
        vals = pair_invariants_MTIP(moved, p, q, rest).as_tuple()
        worst = max(worst, max(abs(a - b) for a, b in zip(vals, base)))
    return worst


# ---- chi canonicalization -------------------------------------------------------


def _two_way_a3a4(state: PureState) -> dict[tuple[int, int], complex]:
    t = state.tensor()
    return {(x, y): inv._font(t, 1, {3: x, 4: y}, {2: 0}) for x in (0, 1) for y in (0, 1)}


def _fourway_mass(state: PureState) -> float:
    d = inv.fourway_determinants(state)
    return float(sum(abs(v) ** 2 for v in d.d.values()))


def canonicalize_chi(state: PureState) -> tuple[PureState, list[tuple[int, SingleQubitUnitary]]]:
    """Bring the chi state to its canonical form with three- and two-way fonts only.

    Applies U(x) on A3 with (x*)^2 = -G00 / G10 (two-way (A3)(A4) fonts), then
    U(1) on A1 and A2. Both square roots are tried and the one leaving less
    four-way font weight wins; the principal root wins ties.
    """
    if state.n_qubits != 4:
        raise WrongArity("canonicalize_chi needs a four-qubit state")
    g = _two_way_a3a4(state)
    if abs(g[1, 0]) < DEGENERATE_TOL:
        raise DegenerateFonts("two-way font D_(A3)1(A4)0 vanishes; x is undefined")
    root = cmath.sqrt(-g[0, 0] / g[1, 0])
    u1 = u_from_x(1)
    best = None
    for x_conj in (root, -root):
        u3 = u_from_x(x_conj.conjugate())
        out = apply_single_qubit_unitary(state, 3, u3)
        out = apply_single_qubit_unitary(out, 1, u1)
        out = apply_single_qubit_unitary(out, 2, u1)
        mass = _fourway_mass(out)
        if best is None or mass < best[0] - DEGENERATE_TOL:
            best = (mass, out, [(3, u3), (1, u1), (2, u1)])
    return best[1], best[2]


def equal_up_to_phase(a: PureState, b: PureState, atol: float = 1e-9) -> bool:
    overlap = np.vdot(b.amplitudes, a.amplitudes)
    if abs(overlap) < 1e-15:
        return False
    phase = overlap / abs(overlap)
    return bool(np.abs(a.amplitudes - phase * b.amplitudes).max() < atol)
