#!/usr/bin/env python3
"""Compare exhaustive N_3(n,2,t) with the piecewise closed form over a grid.

    python3 scripts/theorem4_sweep.py --n 4..9 --t 2..5 --workers 4 --csv sweep.csv
"""

import argparse
import csv
import sys
import time

from seqrecon import formulas as F
from seqrecon.balls import BudgetError
from seqrecon.cli import int_range
from seqrecon.search import SearchSpec, max_intersection


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int_range, default=int_range("4..8"))
    ap.add_argument("--t", type=int_range, default=int_range("2..5"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget", type=float, default=None)
    ap.add_argument("--csv", default=None)
    args = ap.parse_args(argv)

    rows = []
    for t in args.t:
        for n in args.n:
            if n < t:
                continue
            try:
                value = F.n3_double(n, t)
            except F.FormulaError:
                continue
            start = time.perf_counter()
            try:
                rep = max_intersection(SearchSpec(3, n, t), budget=args.budget and int(args.budget),
                                       workers=args.workers)
            except BudgetError as e:
                print(f"n={n} t={t}: skipped ({e})")
                continue
            secs = time.perf_counter() - start
            x, y, _ = rep.witnesses[0]
            row = [n, t, value.params["branch"], value.value, rep.maximum, rep.witness_count, str(x), str(y),
                   round(secs, 2)]
            rows.append(row)
            mark = "ok" if rep.maximum == value.value else "MISMATCH"
            print(f"n={n} t={t} {value.params['branch']:>11} formula={value.value:>4} search={rep.maximum:>4} "
                  f"{mark}  e.g. {x} / {y}  ({secs:.1f}s)")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "t", "branch", "formula", "search", "witness_count", "x", "y", "seconds"])
            w.writerows(rows)
    return 0 if all(r[3] == r[4] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
