import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negfont.errors import (
    BadBitstring, DuplicateIndex, NotAPermutation, NotUnitary, ParseError,
    QubitOutOfRange, WrongArity, ZeroState,
)
from negfont.state import (
    PureState, SingleQubitUnitary, apply_local_unitaries, apply_single_qubit_unitary,
    bits_to_index, compose_permutations, index_to_bits, invert_permutation, make_state,
    parse_state_text, permute_qubits, random_product_state, random_state, random_su2,
    random_u2, serialize_state_text, slice_on_qubit,
)

from oracles import apply_on, haar_unitary

perms4 = st.permutations([1, 2, 3, 4])


def test_msb_convention():
    s = make_state(3, {"100": 1})
    assert s.amplitudes[4] == 1
    assert s.amplitude("100") == 1
    assert s.tensor()[1, 0, 0] == 1
    assert index_to_bits(4, 3) == "100"
    assert bits_to_index([1, 0, 0], 3) == 4


def test_make_state_normalizes():
    s = make_state(2, [("00", 3), ("11", 4j)])
    assert s.is_normalized
    assert s.amplitude("11") == pytest.approx(0.8j)
    assert s.nonzero_terms() == [("00", pytest.approx(0.6)), ("11", pytest.approx(0.8j))]


@pytest.mark.parametrize(
    "entries, err",
    [
        ({"0000": 0}, ZeroState),
        ([("0000", 1), ("0000", 1)], DuplicateIndex),
        ({"012": 1}, BadBitstring),
        ({"000": 1}, BadBitstring),
    ],
)
def test_make_state_errors(entries, err):
    with pytest.raises(err):
        make_state(4, entries)


def test_constructor_checks():
    with pytest.raises(WrongArity):
        PureState(1, [1, 0])
    with pytest.raises(WrongArity):
        PureState(3, np.ones(4))
    with pytest.raises(WrongArity):
        PureState.from_vector(np.ones(6))
    raw = PureState(2, [1, 1, 0, 0])
    assert not raw.is_normalized
    assert raw.norm == pytest.approx(np.sqrt(2))


def test_amplitudes_read_only():
    s = random_state(3, 0)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 1


def test_unitary_validation():
    with pytest.raises(NotUnitary):
        SingleQubitUnitary(np.array([[1, 1], [0, 1]]))
    with pytest.raises(NotUnitary):
        SingleQubitUnitary(np.eye(3))
    assert SingleQubitUnitary.identity().det == 1


def test_apply_unitary_matches_kron():
    rng = np.random.default_rng(1)
    s = random_state(3, rng)
    u = haar_unitary(2, rng)
    full = np.kron(np.kron(np.eye(2), u), np.eye(2))
    got = apply_single_qubit_unitary(s, 2, SingleQubitUnitary(u))
    assert np.allclose(got.amplitudes, full @ s.amplitudes)
    assert np.allclose(got.amplitudes, apply_on(s.amplitudes, 3, 2, u))


def test_apply_local_unitaries_arity():
    with pytest.raises(WrongArity):
        apply_local_unitaries(random_state(3, 0), [np.eye(2)] * 2)
    with pytest.raises(QubitOutOfRange):
        apply_single_qubit_unitary(random_state(3, 0), 4, np.eye(2))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 1000))
def test_haar_draws_are_unitary_and_deterministic(seed, stream):
    u = random_u2(seed, stream)
    v = random_su2(seed, stream)
    assert np.allclose(u.matrix.conj().T @ u.matrix, np.eye(2), atol=1e-12)
    assert abs(v.det - 1) < 1e-12
    assert np.array_equal(random_su2(seed, stream).matrix, v.matrix)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_local_unitaries_preserve_norm(seed, qubits):
    s = random_state(4, seed)
    for k, q in enumerate(qubits):
        s = apply_single_qubit_unitary(s, q, random_u2(seed, k))
    assert abs(s.norm - 1) < 1e-12


@settings(max_examples=50, deadline=None)
@given(perms4, perms4, st.integers(0, 1000))
def test_permutation_group_laws(p1, p2, seed):
    s = random_state(4, seed)
    twice = permute_qubits(permute_qubits(s, p1), p2)
    once = permute_qubits(s, compose_permutations(p1, p2))
    assert twice.allclose(once)
    back = permute_qubits(permute_qubits(s, p1), invert_permutation(p1))
    assert back.allclose(s)


def test_permute_relabels():
    s = make_state(3, {"100": 1})
    # new qubit 3 carries old qubit 1
    assert permute_qubits(s, [2, 3, 1]).amplitude("001") == 1
    with pytest.raises(NotAPermutation):
        permute_qubits(s, [1, 1, 2])


def test_slice_on_qubit():
    s = random_state(4, 2)
    b = slice_on_qubit(s, 3, 1)
    assert b.shape == (2, 2, 2)
    assert b[1, 0, 1] == s.amplitude("1011")
    with pytest.raises(WrongArity):
        slice_on_qubit(random_state(3, 0), 1, 0)
    with pytest.raises(BadBitstring):
        slice_on_qubit(s, 1, 2)


def test_product_state_has_no_entanglement():
    s = random_product_state(4, 5)
    r = s.amplitudes.reshape(2, 8)
    assert np.linalg.matrix_rank(r, tol=1e-10) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10_000))
def test_text_round_trip(n, seed):
    s = random_state(n, seed)
    assert parse_state_text(serialize_state_text(s)).allclose(s, atol=1e-15)


def test_parse_comments_and_header():
    text = "# bell\nqubits 2\n00 1 0\n\n11 0 1  \n"
    s = parse_state_text(text)
    assert s.amplitude("11") == pytest.approx(1j / np.sqrt(2))


@pytest.mark.parametrize(
    "text, line",
    [
        ("00 1 0\n01 x 0\n", 2),
        ("00 1 0\n001 1 0\n", 2),
        ("00 1 0\n00 1 0\n", 2),
        ("qubits two\n", 1),
        ("00 1\n", 1),
        ("0a 1 0\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_state_text(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_parse_zero_state():
    with pytest.raises(ZeroState):
        parse_state_text("00 0 0\n")
    with pytest.raises(ZeroState):
        parse_state_text("# nothing\n")
