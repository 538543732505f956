"""Print both invariant tables for the catalog states and write them as TSV.

    python3 scripts/reproduce_tables.py [--out DIR]
"""

import argparse
from pathlib import Path

from negfont import catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, help="directory for table1.tsv / table2.tsv")
    args = ap.parse_args()

    print(catalog.render_table1())
    print(catalog.render_table2())
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        for which, columns in (("table1", catalog.TABLE1_COLUMNS), ("table2", catalog.TABLE2_COLUMNS)):
            rows = {}
            for cell in catalog.table_cells(which):
                rows.setdefault(cell.row, []).append(catalog.fmt_complex(cell.computed))
            lines = ["state\t" + "\t".join(columns)] + [f"{r}\t" + "\t".join(v) for r, v in rows.items()]
            (args.out / f"{which}.tsv").write_text("\n".join(lines) + "\n")
        print(f"wrote {args.out}/table1.tsv and table2.tsv")


if __name__ == "__main__":
    main()
