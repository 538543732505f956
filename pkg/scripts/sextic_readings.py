"""Search the sign and superscript readings of the degree-six A2/A3 invariant.

Each of the four three-way lines holds two differences of three-way fonts
whose second superscript is ambiguous (one of 001, 010, 100), and each of the
six terms has a sign. All 3^8 * 2^6 readings are evaluated on a random state
and on a random local-unitary image of it; the readings that agree are the
LU-invariant ones. Their values on the HS state are printed.

    python3 scripts/sextic_readings.py [--seed 7]
"""

import argparse
import itertools


from negfont import catalog
from negfont.invariants4 import notation_det
from negfont.state import apply_single_qubit_unitary, random_state, random_su2

OPTIONS = ("001", "010", "100")
# (two-way font subscripts, A1-held bit, A4-held bit) per three-way line
LINES = (((0, 1), 1, 0), ((0, 0), 1, 1), ((1, 0), 0, 1), ((1, 1), 0, 0))


def pieces(state):
    t = state.tensor()
    two = {(x, y): notation_det(t, 2, {1: x, 4: y}, "00") for x in (0, 1) for y in (0, 1)}
    held1 = {(x, s): notation_det(t, 2, {1: x}, s) for x in (0, 1) for s in ("000",) + OPTIONS}
    held4 = {(y, s): notation_det(t, 2, {4: y}, s) for y in (0, 1) for s in ("000",) + OPTIONS}
    combo = sum(
        sign * notation_det(t, 2, {}, sup)
        for sign, sup in ((1, "0000"), (1, "0001"), (-1, "0010"), (-1, "0011"))
    )
    return two, held1, held4, combo


def evaluate(pc, signs, sups):
    two, held1, held4, combo = pc
    value = signs[0] * two[0, 0] * two[1, 1] * combo + signs[1] * two[0, 1] * two[1, 0] * combo
    for k, (xy, x1, y4) in enumerate(LINES):
        a = held1[x1, "000"] - held1[x1, sups[2 * k]]
        b = held4[y4, "000"] - held4[y4, sups[2 * k + 1]]
        value += signs[2 + k] * two[xy] * a * b
    return value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    s = random_state(4, args.seed)
    moved = s
    for q in range(1, 5):
        moved = apply_single_qubit_unitary(moved, q, random_su2(args.seed, q))
    pa, pb, ph = pieces(s), pieces(moved), pieces(catalog.preset("hs"))

    hits = []
    for signs in itertools.product((1, -1), repeat=6):
        for sups in itertools.product(OPTIONS, repeat=8):
            if abs(evaluate(pa, signs, sups) - evaluate(pb, signs, sups)) < 1e-10:
                hits.append((signs, sups, evaluate(ph, signs, sups)))
    print(f"{len(hits)} invariant readings out of {3**8 * 2**6}")
    for signs, sups, value in hits:
        print(signs, sups, f"HS value {catalog.fmt_complex(value)}")


if __name__ == "__main__":
    main()
