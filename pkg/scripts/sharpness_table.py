"""Tabulate predicted and exactly computed invariants for the extremal family.

    python3 scripts/sharpness_table.py --max-n 20 --csv sharpness.csv
"""

import argparse
import csv
import sys

from circumference.exact_solvers import subset_table
from circumference.extremal import build_extremal, parameter_grid, predicted_invariants

COLUMNS = ["kappa", "delta", "n", "circumference", "predicted", "p_bar", "c_bar", "bound1", "bound2", "cycle_sets", "sharp"]


def rows(max_n: int):
    for p in parameter_grid(max_n):
        pred = predicted_invariants(p)
        g = build_extremal(p)
        t = subset_table(g)
        circ = t.longest_cycle()
        delta = min(g.degrees())
        sets = t.cycle_sets(circ)
        pbs = {t.longest_path(t.full & ~s) for s in sets}
        cbs = {t.longest_cycle(t.full & ~s) for s in sets}
        b1 = {(pb + 2) * (delta - pb) for pb in pbs}
        b2 = {(cb + 1) * (delta - cb + 1) for cb in cbs}
        yield {
            "kappa": p.kappa, "delta": p.delta, "n": g.n, "circumference": circ,
            "predicted": pred.circumference, "p_bar": "/".join(map(str, sorted(pbs))),
            "c_bar": "/".join(map(str, sorted(cbs))), "bound1": "/".join(map(str, sorted(b1))),
            "bound2": "/".join(map(str, sorted(b2))), "cycle_sets": len(sets),
            "sharp": circ == pred.circumference and b1 == b2 == {circ},
        }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--csv")
    args = ap.parse_args()
    table = list(rows(args.max_n))
    widths = {c: max(len(c), *(len(str(r[c])) for r in table)) for c in COLUMNS}
    print("  ".join(c.rjust(widths[c]) for c in COLUMNS))
    for r in table:
        print("  ".join(str(r[c]).rjust(widths[c]) for c in COLUMNS))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, COLUMNS)
            w.writeheader()
            w.writerows(table)
    return 0 if all(r["sharp"] for r in table) else 1


if __name__ == "__main__":
    sys.exit(main())
