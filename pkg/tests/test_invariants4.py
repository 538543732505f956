import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negfont import invariants4 as inv
from negfont.catalog import PRESET_TERMS, preset
from negfont.errors import BadPair, BadRoles, QubitOutOfRange, WrongArity
from negfont.state import apply_single_qubit_unitary, permute_qubits, random_state, random_su2, slice_on_qubit

from oracles import J_LITERAL, T4, amplitudes, cayley_hyperdet

seeds = st.integers(0, 2**31 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_j4_against_literal_transcription(seed):
    s = random_state(4, seed)
    for pair, oracle in J_LITERAL.items():
        assert abs(inv.j4(s, pair) - oracle(s.amplitudes)) < 1e-13
    assert abs(inv.t4(s) - T4(s.amplitudes)) < 1e-14


@pytest.mark.parametrize("name", sorted(PRESET_TERMS))
def test_catalog_j4_against_literal(name):
    a = amplitudes(PRESET_TERMS[name])
    s = preset(name)
    for pair, oracle in J_LITERAL.items():
        assert abs(inv.j4(s, pair) - oracle(a)) < 1e-13


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_complement_pairs_agree(seed):
    s = random_state(4, seed)
    for pair, comp in inv.COMPLEMENT.items():
        assert inv.j4(s, pair) == inv.j4(s, comp)


@settings(max_examples=20, deadline=None)
@given(seeds, st.permutations([2, 3, 4]))
def test_relabeling_permutes_pairs(seed, tail):
    # moving qubits among A2..A4 permutes the J4 pairs containing A1
    s = random_state(4, seed)
    perm = [1, *tail]
    moved = permute_qubits(s, perm)
    for q in (2, 3, 4):
        new_q = perm.index(q) + 1
        assert abs(inv.j4(moved, (1, new_q)) - inv.j4(s, (1, q))) < 1e-13


def test_pair_validation():
    s = random_state(4, 0)
    assert inv.j4(s, (3, 1)) == inv.j4(s, (1, 3))
    for bad in [(1, 1), (0, 2), (1, 5), (1, 2, 3)]:
        with pytest.raises(BadPair):
            inv.j4(s, bad)
    with pytest.raises(WrongArity):
        inv.t4(random_state(3, 0))


def test_fourway_antisymmetry():
    d = inv.fourway_determinants(random_state(4, 1))
    for key in d.d:
        bar = tuple(1 - b for b in key)
        assert d[bar] == pytest.approx(-d[key])


def test_ghz_values():
    g = preset("ghz")
    assert inv.t4(g) == pytest.approx(0.5)
    assert inv.tau4(g) == pytest.approx(1)
    assert inv.beta4(g)[0] == pytest.approx(1 / 3)
    assert inv.delta4(g)[1] == pytest.approx(0, abs=1e-12)


def test_product_state_is_all_zero():
    s = preset("b(1,0,0,0)")
    r = inv.full_report(s)
    assert r.t4 == 0 and r.tau4 == 0 and r.beta4 == 0
    assert all(v == 0 for v in r.j4.values())
    assert r.i6_a2a3 == 0


def test_state1_pair_values():
    s = preset("state1")
    j = inv.j4_all(s)
    d = inv.fourway_determinants(s)
    combo14 = d[0, 0, 0] - d[0, 0, 1] + d[0, 1, 0] - d[0, 1, 1]
    assert abs(combo14) < 1e-15
    assert j[1, 4] == pytest.approx(0.25)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_slice_i3_is_hyperdeterminant(seed):
    s = random_state(4, seed)
    for q, r, fixed in inv.TABLE2_ROLES:
        tr = inv.triple_invariants(s, q, r, fixed)
        for x, tau in ((0, tr.tau3_slice0), (1, tr.tau3_slice1)):
            b = slice_on_qubit(s, fixed, x)
            assert abs(tau - 4 * abs(cayley_hyperdet(b))) < 1e-13
            assert abs(inv.three_qubit_i3(np.transpose(b, (0, 2, 1)) if q < r else b)) == pytest.approx(
                abs(cayley_hyperdet(b)), abs=1e-14
            )


def test_ghz_slices_carry_no_three_tangle():
    tr = inv.triple_invariants(preset("ghz"), 2, 3, 4)
    assert tr.tau3_slice0 == tr.tau3_slice1 == 0


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(1, 4), st.sampled_from(inv.TABLE2_ROLES))
def test_subsystem_invariants_under_their_own_qubits(seed, k, roles):
    q, r, fixed = roles
    s = random_state(4, seed)
    base = inv.triple_invariants(s, q, r, fixed)
    moved = apply_single_qubit_unitary(s, k, random_su2(seed, k))
    after = inv.triple_invariants(moved, q, r, fixed)
    if k != fixed:
        for attr in ("i4", "p3", "i3_overall", "i3_slice0", "i3_slice1"):
            assert abs(getattr(after, attr) - getattr(base, attr)) < 1e-12
    # J4 = I4 + P3 holds either way
    assert abs(after.i4 + after.p3 - inv.j4(moved, (1, q))) < 1e-13


def test_subsystem_invariants_not_invariant_on_fixed_qubit():
    s = random_state(4, 3)
    base = inv.triple_invariants(s, 2, 3, 4)
    moved = apply_single_qubit_unitary(s, 4, random_su2(1, 0))
    assert abs(inv.triple_invariants(moved, 2, 3, 4).i4 - base.i4) > 1e-4


def test_roles_validation():
    s = random_state(4, 0)
    for roles in [(2, 2, 3), (1, 3, 4)]:
        with pytest.raises(BadRoles):
            inv.triple_invariants(s, *roles)
    with pytest.raises(QubitOutOfRange):
        inv.triple_invariants(s, 2, 3, 5)


def test_triple_label():
    tr = inv.triple_invariants(random_state(4, 0), 4, 2, 3)
    assert tr.label == "A1A4A2"


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_sextic_invariant_reading_is_lu_invariant(seed):
    s = random_state(4, seed)
    moved = s
    for q in range(1, 5):
        moved = apply_single_qubit_unitary(moved, q, random_su2(seed, q))
    assert abs(inv.i6_a2a3(moved) - inv.i6_a2a3(s)) < 1e-12


def test_sextic_as_typeset_is_not_invariant():
    s = random_state(4, 1)
    moved = s
    for q in range(1, 5):
        moved = apply_single_qubit_unitary(moved, q, random_su2(5, q))
    assert abs(inv.i6_a2a3(moved, "printed") - inv.i6_a2a3(s, "printed")) > 1e-3


def test_sextic_catalog_values():
    assert inv.i6_a2a3(preset("hs")) == pytest.approx(-1 / 108)
    for name in ("ghz", "chi", "chi_c", "c1", "c2", "c3", "phi"):
        assert abs(inv.i6_a2a3(preset(name))) < 1e-14
    rep = inv.sextic_deviation_report(preset("hs"))
    assert set(rep) == {"invariant", "printed"}


def test_hs_j_values():
    j = inv.j4_all(preset("hs"))
    w = (1j * np.sqrt(3) - 1) / 6
    assert j[1, 2] == pytest.approx(1 / 3)
    assert j[1, 3] == pytest.approx(w)
    assert j[1, 4] == pytest.approx(-(1j * np.sqrt(3) + 1) / 6)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_full_report_consistent(seed):
    r = inv.full_report(random_state(4, seed))
    assert r.consistent
    assert max(r.residuals.values()) < 1e-10
    assert r.delta4_sum - r.delta4_avg == pytest.approx(0.75 * sum(r.negativity_sq))
    assert 0 <= r.beta4 <= 1 + 1e-12
