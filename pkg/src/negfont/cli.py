"""Command-line front end: ``negfont <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import catalog
from .errors import NegFontError
from .fonts import enumerate_fonts, negativity_sq_from_fonts
from .lu import QUANTITIES, SUBSYSTEM_QUBITS, canonicalize_chi, invariance_sweep
from .state import PureState, parse_state_text, serialize_state_text
from .transpose import negativity, reduced_qubit_linear_entropy

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


def _add_state_args(p: argparse.ArgumentParser, default: str | None) -> None:
    g = p.add_mutually_exclusive_group(required=default is None)
    g.add_argument("--preset", metavar="NAME", help=f"catalog state ({', '.join(catalog.PRESET_NAMES)}; b as 'b(a,b,c,d)')")
    g.add_argument("--file", metavar="PATH", help="state file: lines 'bitstring amplitude', optional 'qubits N'")
    p.set_defaults(default_preset=default)


def _load_state(args) -> tuple[PureState, str]:
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise NegFontError(f"cannot read {args.file}: {exc.strerror}") from None
        return parse_state_text(text), Path(args.file).stem
    name = args.preset or args.default_preset
    return catalog.preset(name), name


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="negfont", description="Negativity fonts and four-qubit LU invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="all invariants of one state")
    _add_state_args(p, None)
    p.add_argument("--format", choices=("pretty", "tsv", "json"), default="pretty")

    sub.add_parser("table1", help="degree-2/4 invariants, tau4, beta4, negativities of the catalog")
    sub.add_parser("table2", help="T4^2, sextic and three-qubit subsystem invariants of the catalog")

    p = sub.add_parser("fonts", help="list nonzero negativity fonts for a transposed qubit")
    _add_state_args(p, "ghz")
    p.add_argument("--qubit", type=int, required=True, metavar="P")
    p.add_argument("--k", type=int, metavar="K", help="only K-way fonts")
    p.add_argument("--min-abs", type=float, default=1e-12, metavar="X")

    p = sub.add_parser("negativity", help="global or K-way negativity of one qubit")
    _add_state_args(p, "ghz")
    p.add_argument("--qubit", type=int, required=True, metavar="P")
    p.add_argument("--k", type=int, metavar="K", help="K-way partial transpose (spectral method only)")
    p.add_argument("--method", choices=("fonts", "spectral", "entropy"), default="spectral")

    p = sub.add_parser("check", help="run the self-test bundle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("invariance", help="max deviation of a quantity under random local unitaries")
    _add_state_args(p, "ghz")
    p.add_argument("--quantity", required=True, metavar="Q", help=f"one of: {', '.join(QUANTITIES)}")
    p.add_argument("--group", choices=("su2", "u2"), default="su2")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=catalog.SWEEP_TOL, help="exit 1 above this deviation")

    p = sub.add_parser("canonicalize-chi", help="local unitaries taking the chi state to its canonical form")
    p.add_argument("--file", metavar="PATH")
    p.set_defaults(preset=None, default_preset="chi")
    return parser


def _cmd_report(args) -> int:
    state, name = _load_state(args)
    sys.stdout.write(catalog.report(state, args.format, name))
    return EXIT_OK


def _cmd_fonts(args) -> int:
    state, _ = _load_state(args)
    records = enumerate_fonts(state, args.qubit, min_abs=args.min_abs)
    if args.k is not None:
        records = [r for r in records if r.k_value == args.k]
    print("K\tlabel\tdet")
    for r in records:
        print(f"{r.k_value}\t{r.label()}\t{catalog.fmt_complex(r.det)}")
    print(f"# {len(records)} fonts")
    return EXIT_OK


def _cmd_negativity(args) -> int:
    state, _ = _load_state(args)
    if args.k is not None and args.method != "spectral":
        raise NegFontError("--k is only available with --method spectral")
    if args.method == "spectral":
        kind = "global" if args.k is None else args.k
        res = negativity(state, args.qubit, kind)
        value = res.value
    elif args.method == "fonts":
        value = float(np.sqrt(max(negativity_sq_from_fonts(state, args.qubit), 0.0)))
    else:
        value = float(np.sqrt(max(reduced_qubit_linear_entropy(state, args.qubit), 0.0)))
    label = "N_G" if args.k is None else f"N_{args.k}"
    print(f"{label}(A{args.qubit})\t{catalog.fmt_real(value)}")
    print(f"{label}(A{args.qubit})^2\t{catalog.fmt_real(value**2)}")
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.samples < 0:
        raise NegFontError("--samples must be non-negative")
    result = catalog.run_selftest(args.seed, args.samples)
    sys.stdout.write(result.render())
    return EXIT_OK if result.ok else EXIT_CHECK


def _cmd_invariance(args) -> int:
    state, name = _load_state(args)
    qubits = SUBSYSTEM_QUBITS.get(args.quantity)
    dev = invariance_sweep(state, args.quantity, args.samples, args.seed, args.group, qubits)
    on = "qubits " + ",".join(f"A{q}" for q in qubits) if qubits else "all qubits"
    print(f"{args.quantity} on {name}: max deviation {dev:.3e} over {args.samples} {args.group.upper()} samples ({on})")
    return EXIT_OK if dev < args.tol else EXIT_CHECK


def _cmd_canonicalize(args) -> int:
    state, _ = _load_state(args)
    out, steps = canonicalize_chi(state)
    for q, u in steps:
        m = u.matrix
        rows = "; ".join(" ".join(catalog.fmt_complex(v) for v in row) for row in m)
        print(f"# U on A{q}: [{rows}]")
    sys.stdout.write(serialize_state_text(out, tol=1e-12))
    return EXIT_OK


COMMANDS = {
    "report": _cmd_report,
    "table1": lambda a: (sys.stdout.write(catalog.render_table1()), EXIT_OK)[1],
    "table2": lambda a: (sys.stdout.write(catalog.render_table2()), EXIT_OK)[1],
    "fonts": _cmd_fonts,
    "negativity": _cmd_negativity,
    "check": _cmd_check,
    "invariance": _cmd_invariance,
    "canonicalize-chi": _cmd_canonicalize,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except NegFontError as exc:
        print(f"negfont: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
