"""N-qubit pure states, local unitaries and the plain-text state format.

Basis index convention: qubit A1 is the most significant bit, so the
amplitude of ``|i1 i2 ... iN>`` sits at ``sum(i_m * 2**(N-m))`` and the
bitstring printed for an index reads exactly like the ket.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    BadBitstring,
    DuplicateIndex,
    NotAPermutation,
    NotUnitary,
    ParseError,
    QubitOutOfRange,
    WrongArity,
    ZeroState,
)

MIN_QUBITS = 2
MAX_QUBITS = 10
NORM_TOL = 1e-10
ZERO_NORM = 1e-12


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    n_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not MIN_QUBITS <= self.n_qubits <= MAX_QUBITS:
            raise WrongArity(f"n_qubits must be in [{MIN_QUBITS}, {MAX_QUBITS}], got {self.n_qubits}")
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2**self.n_qubits:
            raise WrongArity(f"expected {2**self.n_qubits} amplitudes, got {amps.size}")
        object.__setattr__(self, "amplitudes", _readonly(amps))

    @classmethod
    def from_vector(cls, vector, normalize: bool = True) -> "PureState":
        vec = np.asarray(vector, dtype=complex).reshape(-1)
        n = int(round(np.log2(vec.size))) if vec.size else 0
        if vec.size == 0 or 2**n != vec.size:
            raise WrongArity(f"vector length {vec.size} is not a power of two")
        if normalize:
            vec = _normalized(vec)
        return cls(n, vec)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm**2 - 1.0) < NORM_TOL

    def tensor(self) -> np.ndarray:
        """Amplitudes as an N-axis array; axis m-1 carries the bit of qubit A_m."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def amplitude(self, bits: str | Sequence[int]) -> complex:
        return complex(self.amplitudes[bits_to_index(bits, self.n_qubits)])

    def nonzero_terms(self, tol: float = 1e-12) -> list[tuple[str, complex]]:
        return [
            (index_to_bits(i, self.n_qubits), complex(a))
            for i, a in enumerate(self.amplitudes)
            if abs(a) > tol
        ]

    def allclose(self, other: "PureState", atol: float = 1e-12) -> bool:
        return self.n_qubits == other.n_qubits and np.allclose(
            self.amplitudes, other.amplitudes, rtol=0, atol=atol
        )


@dataclass(frozen=True, eq=False)
class SingleQubitUnitary:
    matrix: np.ndarray = field(repr=False)
    det: complex = 0j

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise NotUnitary(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.abs(m.conj().T @ m - np.eye(2)).max() > 1e-12:
            raise NotUnitary("matrix is not unitary within 1e-12")
        object.__setattr__(self, "matrix", _readonly(m))
        object.__setattr__(self, "det", complex(np.linalg.det(m)))

    @classmethod
    def identity(cls) -> "SingleQubitUnitary":
        return cls(np.eye(2))


def _normalized(vec: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(vec)
    if norm < ZERO_NORM:
        raise ZeroState("state has zero norm")
    return vec / norm


def check_qubit(q: int, n_qubits: int) -> int:
    if not isinstance(q, (int, np.integer)) or not 1 <= q <= n_qubits:
        raise QubitOutOfRange(f"qubit label {q!r} outside [1, {n_qubits}]")
    return int(q)


def bits_to_index(bits: str | Sequence[int], n_qubits: int) -> int:
    if isinstance(bits, str):
        if len(bits) != n_qubits or set(bits) - {"0", "1"}:
            raise BadBitstring(f"{bits!r} is not a binary string of length {n_qubits}")
        return int(bits, 2)
    bits = list(bits)
    if len(bits) != n_qubits or any(b not in (0, 1) for b in bits):
        raise BadBitstring(f"{bits!r} is not a bit sequence of length {n_qubits}")
    index = 0
    for b in bits:
        index = (index << 1) | int(b)
    return index


def index_to_bits(index: int, n_qubits: int) -> str:
    return format(index, f"0{n_qubits}b")


def make_state(
    n_qubits: int, entries: Mapping[str, complex] | Iterable[tuple[str, complex]]
) -> PureState:
    """Build a normalized state from ``(bitstring, amplitude)`` pairs.

    Unlisted basis states get amplitude zero.
    """
    if isinstance(entries, Mapping):
        entries = entries.items()
    amps = np.zeros(2**n_qubits, dtype=complex)
    seen = set()
    for bits, value in entries:
        index = bits_to_index(bits, n_qubits)
        if index in seen:
            raise DuplicateIndex(f"bitstring {bits!r} listed twice")
        seen.add(index)
        amps[index] = complex(value)
    return PureState(n_qubits, _normalized(amps))


def random_state(n_qubits: int, rng: np.random.Generator | int | None = None) -> PureState:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    rng = np.random.default_rng(rng)
    dim = 2**n_qubits
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(n_qubits, _normalized(vec))


def random_product_state(n_qubits: int, rng: np.random.Generator | int | None = None) -> PureState:
    rng = np.random.default_rng(rng)
    vec = np.ones(1, dtype=complex)
    for _ in range(n_qubits):
        local = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        vec = np.kron(vec, local / np.linalg.norm(local))
    return PureState(n_qubits, vec)


# ---- text format -----------------------------------------------------------


def parse_state_text(text: str, n_qubits: int | None = None) -> PureState:
    """Parse the ``BITS RE IM`` line format.

    ``#`` starts a comment line. The first data line may be ``qubits N``;
    otherwise N comes from the ``n_qubits`` argument or the first bitstring.
    """
    entries: list[tuple[str, complex]] = []
    seen: set[str] = set()
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if first_data and fields[0] == "qubits":
            first_data = False
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError(f"bad qubit declaration {line!r}", lineno)
            declared = int(fields[1])
            if n_qubits is not None and n_qubits != declared:
                raise ParseError(f"declared {declared} qubits, expected {n_qubits}", lineno)
            n_qubits = declared
            continue
        first_data = False
        if len(fields) != 3:
            raise ParseError(f"expected 'BITS RE IM', got {line!r}", lineno)
        bits, re_s, im_s = fields
        if set(bits) - {"0", "1"}:
            raise ParseError(f"non-binary bitstring {bits!r}", lineno)
        if n_qubits is None:
            n_qubits = len(bits)
        if len(bits) != n_qubits:
            raise ParseError(f"bitstring {bits!r} does not have {n_qubits} bits", lineno)
        if bits in seen:
            raise ParseError(f"duplicate bitstring {bits!r}", lineno)
        try:
            value = complex(float(re_s), float(im_s))
        except ValueError:
            raise ParseError(f"bad amplitude in {line!r}", lineno) from None
        seen.add(bits)
        entries.append((bits, value))
    if n_qubits is None or not entries:
        raise ZeroState("no amplitudes in state text")
    if not MIN_QUBITS <= n_qubits <= MAX_QUBITS:
        raise ParseError(f"unsupported qubit count {n_qubits}")
    return make_state(n_qubits, entries)


def serialize_state_text(state: PureState, tol: float = 0.0) -> str:
    lines = [f"qubits {state.n_qubits}"]
    for i, a in enumerate(state.amplitudes):
        if abs(a) > tol:
            lines.append(f"{index_to_bits(i, state.n_qubits)} {float(a.real)!r} {float(a.imag)!r}")
    return "\n".join(lines) + "\n"


# ---- local operations ------------------------------------------------------


def apply_single_qubit_unitary(state: PureState, q: int, u: SingleQubitUnitary | np.ndarray) -> PureState:
    """a'[..i_q..] = sum_j u[i_q, j] a[..j..]."""
    q = check_qubit(q, state.n_qubits)
    matrix = u.matrix if isinstance(u, SingleQubitUnitary) else np.asarray(u, dtype=complex)
    t = np.tensordot(matrix, state.tensor(), axes=([1], [q - 1]))
    t = np.moveaxis(t, 0, q - 1)
    return PureState(state.n_qubits, t.reshape(-1))


def apply_local_unitaries(state: PureState, unitaries: Sequence[SingleQubitUnitary | np.ndarray]) -> PureState:
    """Apply one unitary per qubit, ``unitaries[m]`` on qubit A_{m+1}."""
    if len(unitaries) != state.n_qubits:
        raise WrongArity(f"need {state.n_qubits} unitaries, got {len(unitaries)}")
    for q, u in enumerate(unitaries, start=1):
        state = apply_single_qubit_unitary(state, q, u)
    return state


def permute_qubits(state: PureState, perm: Sequence[int]) -> PureState:
    """Relabel qubits: new qubit k carries old qubit ``perm[k-1]``.

    Equivalently a'[i_perm(1) ... i_perm(N)] = a[i_1 ... i_N].
    """
    n = state.n_qubits
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutation(f"{perm} is not a permutation of 1..{n}")
    t = np.transpose(state.tensor(), [p - 1 for p in perm])
    return PureState(n, np.ascontiguousarray(t).reshape(-1))


def compose_permutations(first: Sequence[int], second: Sequence[int]) -> list[int]:
    """Permutation equal to applying ``first`` and then ``second``."""
    return [first[s - 1] for s in second]


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for k, p in enumerate(perm, start=1):
        inv[p - 1] = k
    return inv


def slice_on_qubit(state: PureState, s: int, value: int) -> np.ndarray:
    """Unnormalized three-qubit tensor b[j,k,l] with qubit ``s`` fixed to ``value``.

    Remaining qubits keep ascending label order.
    """
    if state.n_qubits != 4:
        raise WrongArity("slice_on_qubit needs a four-qubit state")
    s = check_qubit(s, 4)
    if value not in (0, 1):
        raise BadBitstring(f"slice value must be 0 or 1, got {value!r}")
    return np.take(state.tensor(), value, axis=s - 1).copy()


# ---- random unitaries ------------------------------------------------------


def _stream_rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


def _haar_u2(rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_u2(seed: int, stream: int = 0) -> SingleQubitUnitary:
    """Haar-random U(2) element, deterministic in ``(seed, stream)``."""
    return SingleQubitUnitary(_haar_u2(_stream_rng(seed, stream)))


def random_su2(seed: int, stream: int = 0) -> SingleQubitUnitary:
    """Haar-random SU(2) element, deterministic in ``(seed, stream)``."""
    u = _haar_u2(_stream_rng(seed, stream))
    return SingleQubitUnitary(u / np.sqrt(np.linalg.det(u)))
