"""Regenerate src/altknot/data/catalog.tsv from the KnotInfo database.

Development-time only: needs ``pip install database_knotinfo``.  Each PD
code is embedded, checked (planar, alternating, reduced) and written as a
signed over/under Gauss code.
"""
import ast
import csv
import sys
from pathlib import Path

from database_knotinfo import link_list

from altknot.diagram import from_pd

WANTED = ["3_1", "4_1", "5_1", "5_2"] + [f"6_{i}" for i in range(1, 4)] \
    + [f"7_{i}" for i in range(1, 8)] + [f"8_{i}" for i in range(1, 19)] + ["10_71"]
OUT = Path(__file__).resolve().parents[1] / "src" / "altknot" / "data" / "catalog.tsv"


def main() -> int:
    rows = {r["name"]: r for r in link_list()}
    lines = ["# name\tsigned over/under Gauss code (from KnotInfo pd_notation)"]
    for name in WANTED:
        r = rows[name]
        if r.get("alternating", "Y") not in ("Y", "y"):
            continue
        emb = from_pd(ast.literal_eval(r["pd_notation"]))
        code = emb.to_code(signed=True)
        assert emb.is_planar() and code.is_alternating, name
        lines.append(f"{name}\t{code}")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} knots to {OUT}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
