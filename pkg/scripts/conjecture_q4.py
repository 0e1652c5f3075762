#!/usr/bin/env python3
"""Data for the q >= 4 conjecture: the proposed pair's intersection against exhaustive N_4(n,2,t).

Nothing here is asserted; the script only reports agreement or disagreement.
"""

import argparse
import json

from seqrecon.balls import BudgetError
from seqrecon.cli import int_range
from seqrecon.extremal import pair_conjecture
from seqrecon.search import SearchSpec, max_intersection


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--n", type=int_range, default=int_range("5..7"))
    ap.add_argument("--t", type=int_range, default=int_range("2..3"))
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    out = []
    for n in args.n:
        pair = pair_conjecture(args.q, n)
        for t in args.t:
            if t > n:
                continue
            rec = {"q": args.q, "n": n, "t": t, "x": str(pair.x), "y": str(pair.y), "pair": pair.intersection(t)}
            try:
                rec["search"] = max_intersection(SearchSpec(args.q, n, t)).maximum
                rec["match"] = rec["search"] == rec["pair"]
            except BudgetError:
                rec["search"] = None
                rec["match"] = None
            out.append(rec)
            if not args.json:
                print(f"q={args.q} n={n} t={t}: pair {rec['pair']}, exhaustive {rec['search']}, match {rec['match']}")
    if args.json:
        print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
