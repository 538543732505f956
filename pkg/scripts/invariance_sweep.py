"""Worst-case drift of every registered quantity under random local unitaries.

    python3 scripts/invariance_sweep.py [--samples 100] [--seed 0] [--random 5]

Subsystem quantities are swept only over the qubits they live on.
"""

import argparse

import numpy as np

from negfont import catalog
from negfont.lu import QUANTITIES, SUBSYSTEM_QUBITS, invariance_sweep
from negfont.state import random_state

SU2_ONLY = {"t4", "t4_sq", "i6", "i6_printed"} | {q for q in QUANTITIES if q.startswith("j4_")} | set(SUBSYSTEM_QUBITS)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random", type=int, default=5, help="number of random states added to the catalog")
    args = ap.parse_args()

    states = {n: catalog.preset(n) for n in ("ghz", "chi", "hs", "c1", "phi")}
    rng = np.random.default_rng(args.seed)
    states.update({f"rand{k}": random_state(4, rng) for k in range(args.random)})
    names = [q for q in QUANTITIES if not q.startswith("negsq_") or int(q.split("_")[1]) <= 4]

    print(f"{'quantity':<20}{'group':<6}{'worst deviation':>18}  state")
    for q in names:
        group = "su2" if q in SU2_ONLY else "u2"
        worst, where = 0.0, ""
        for label, s in states.items():
            dev = invariance_sweep(s, q, args.samples, args.seed, group, SUBSYSTEM_QUBITS.get(q))
            if dev >= worst:
                worst, where = dev, label
        flag = "" if worst < catalog.SWEEP_TOL else "  <- not invariant"
        print(f"{q:<20}{group:<6}{worst:>18.3e}  {where}{flag}")


if __name__ == "__main__":
    main()
