"""Command-line entry point: ``seqrecon <subcommand> ...``.

Exit status: 0 success, 1 a verification failed, 2 usage error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import itertools
import json
import sys
from contextlib import contextmanager

from seqrecon import claims as C
from seqrecon import formulas as F
from seqrecon.balls import BudgetError, ball_size, deletion_distance, enumerate_ball, intersect_balls
from seqrecon.extremal import pair_conjecture, pair_m0, pair_m1, pair_thm1
from seqrecon.reconstruct import ReconstructionError, _closed_form, build_code, simulate
from seqrecon.search import SearchSpec, csv_header, csv_row, default_budget, max_intersection
from seqrecon.words import WordError, parse_word

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    def __init__(self, message: str, reason: str = "usage"):
        super().__init__(message)
        self.reason = reason


def int_range(text: str) -> list[int]:
    """``"6..8"`` -> [6, 7, 8]; a bare integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a..b range, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqrecon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="enumerate or count a deletion ball")
    p.add_argument("word")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--count-only", action="store_true")
    _add_common(p)

    p = sub.add_parser("intersect", help="intersection of two deletion balls")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--tx", type=int, required=True)
    p.add_argument("--ty", type=int, required=True)
    p.add_argument("--q", type=int, default=3)
    _add_common(p)

    p = sub.add_parser("dist", help="deletion (Levenshtein) distance")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--q", type=int, default=3)
    _add_common(p)

    p = sub.add_parser("formula", help="evaluate one closed form")
    p.add_argument("id", help=f"one of {sorted(F.EVALUATORS)} or 'N' for N_q(n,d,t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("table", help="tabulate a closed form over a rectangle")
    p.add_argument("id")
    p.add_argument("--n-range", type=int_range, required=True)
    p.add_argument("--t-range", type=int_range, required=True)
    p.add_argument("--q", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("search", help="exhaustive maximum ball intersection")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--no-reduce", action="store_true", help="scan every x, not just canonical ones")
    p.add_argument("--witness-cap", type=int, default=64)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("verify", help="check registered claims")
    p.add_argument("claim", help=f"one of {sorted(C.CLAIMS)} or 'all'")
    p.add_argument("--desk", action="store_true", help="with 'all': run the full desk-scale sweep")
    for name in ("q", "n", "t", "k", "d"):
        p.add_argument(f"--{name}", type=int_range, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("code", help="greedy lexicographic deletion code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("simulate", help="multi-channel reconstruction trials")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--channels", type=int, default=None, help="default: the guaranteed threshold")
    _add_common(p)

    p = sub.add_parser("pair", help="explicit extremal pair")
    p.add_argument("kind", choices=("m0", "m1", "thm1", "conjecture"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--t", type=int, default=None, help="also report the intersection at this radius")
    _add_common(p)
    return parser


def _budget(args) -> int:
    return default_budget() if args.budget is None else int(args.budget)


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_ball(args):
    x = parse_word(args.word, args.q)
    if args.count_only:
        size = ball_size(x, args.t)
        return {"word": str(x), "t": args.t, "size": size}, f"{size}\n", _csv(["word", "t", "size"], [[x, args.t, size]])
    ball = enumerate_ball(x, args.t)
    data = {"word": str(x), "t": args.t, "size": len(ball), "members": ball.strings()}
    return data, f"size {len(ball)}\n" + ball.to_lines(), _csv(["member"], [[s] for s in ball.strings()])


def cmd_intersect(args):
    x, y = parse_word(args.x, args.q), parse_word(args.y, args.q)
    common = intersect_balls(x, args.tx, y, args.ty)
    data = {"x": str(x), "y": str(y), "tx": args.tx, "ty": args.ty, "size": len(common), "members": common.strings()}
    return data, f"size {len(common)}\n" + common.to_lines(), _csv(["member"], [[s] for s in common.strings()])


def cmd_dist(args):
    x, y = parse_word(args.x, args.q), parse_word(args.y, args.q)
    if x.n < y.n:
        x, y = y, x
    d = deletion_distance(x, y)
    return {"x": str(x), "y": str(y), "distance": d}, f"{d}\n", _csv(["x", "y", "distance"], [[x, y, d]])


def cmd_formula(args):
    if args.id.lower() in ("n", "nq"):
        q = 3 if args.q is None else args.q
        if args.d is None:
            raise UsageError("formula N needs --d")
        value = _closed_form(q, args.n, args.t, args.d)
        if value is None:
            raise F.FormulaError(f"no closed form for N_{q}(n={args.n}, d={args.d}, t={args.t})",
                                 "outside-theorem-range")
    else:
        value = F.evaluate(args.id, args.n, args.t, args.q)
    data = value.as_dict()
    return data, f"{value.value}\n", _csv(["n", "t", "value", "formula"],
                                          [[args.n, args.t, value.value, value.formula.value]])


def cmd_table(args):
    rows = F.table(args.id, args.n_range, args.t_range, args.q)
    text = "".join(f"{r['n']}\t{r['t']}\t{r['value']}\n" for r in rows)
    return rows, text, _csv(["n", "t", "value", "formula"], [[r["n"], r["t"], r["value"], r["formula"]] for r in rows])


def cmd_search(args):
    spec = SearchSpec(args.q, args.n, args.t, args.k, args.d, not args.no_reduce, args.witness_cap)
    report = max_intersection(spec, budget=_budget(args), workers=args.workers)
    lines = [f"maximum {report.maximum}  ({report.witness_count} maximising pairs, "
             f"{report.classes_examined} classes, {report.elapsed_ms:.0f} ms)"]
    lines += [f"{x} {y} {s}" for x, y, s in report.witnesses]
    return report.as_dict(), "\n".join(lines) + "\n", _csv(csv_header(), [csv_row(report)])


def _claim_cells(claim: str, args):
    fn = C.CLAIMS[claim]
    names = [p for p in inspect.signature(fn).parameters if p in ("q", "n", "t", "k", "d")]
    ranges = []
    for name in names:
        values = getattr(args, name)
        if values is None:
            raise UsageError(f"verify {claim} needs --{name}")
        ranges.append(values)
    for combo in itertools.product(*ranges):
        yield dict(zip(names, combo))


def cmd_verify(args):
    budget = _budget(args)
    rows, skipped = [], 0
    if args.claim == "all":
        if args.desk:
            for sweep in C.desk_sweep(budget=budget, workers=args.workers):
                rows.extend(sweep.rows)
        else:
            for name in ("lemma15", "f_positive", "lemma16", "lemma17", "lemma18", "identities", "m_recurrence"):
                cells = [{"k": k} for k in range(3, 13)] if name == "lemma15" else [{}]
                rows.extend(C.verify_claim(name, **c) for c in cells)
    else:
        claim = args.claim.lower()
        if claim not in C.CLAIMS:
            raise C.ClaimError(f"unknown claim {args.claim!r}; choose from {sorted(C.CLAIMS)}", "unknown-claim")
        extra = {"budget": budget, "workers": args.workers} if claim in C._SEARCHING else {}
        for params in _claim_cells(claim, args):
            try:
                rows.append(C.verify_claim(claim, **params, **extra))
            except C.ClaimError as e:
                if e.reason != "out-of-range":
                    raise
                skipped += 1
        if not rows:
            raise UsageError(f"no parameter cell lies inside the range of {claim}", "out-of-range")
    ok = all(r.passed for r in rows)
    data = {"claim": args.claim, "passed": ok, "skipped": skipped, "rows": [r.as_dict() for r in rows]}
    text = "".join(
        f"{r.verdict.upper():4} {r.claim} {' '.join(f'{k}={v}' for k, v in r.params.items())} "
        f"expected={r.expected} observed={r.observed}{'  # ' + r.note if r.note else ''}\n"
        for r in rows
    )
    text += f"{sum(r.passed for r in rows)}/{len(rows)} passed\n"
    table = _csv(["claim", "params", "expected", "observed", "verdict"],
                 [[r.claim, json.dumps(r.params), r.expected, r.observed, r.verdict] for r in rows])
    return data, text, table, (EXIT_OK if ok else EXIT_FAILED)


def cmd_code(args):
    code = build_code(args.q, args.n, args.d)
    return code.as_dict(), f"{len(code)} codewords\n" + code.codewords.to_lines(), _csv(
        ["codeword"], [[s] for s in code.codewords.strings()])


def cmd_simulate(args):
    rep = simulate(args.q, args.n, args.t, args.d, args.trials, args.seed, args.channels)
    d = rep.as_dict()
    text = (f"threshold {rep.threshold} ({rep.source}), channels {rep.channels}: "
            f"{rep.unique} unique, {rep.ambiguous} ambiguous, {rep.inconsistent} inconsistent of {rep.trials}\n")
    return d, text, _csv(["trials", "unique", "ambiguous", "inconsistent", "threshold"],
                         [[rep.trials, rep.unique, rep.ambiguous, rep.inconsistent, rep.threshold]])


def cmd_pair(args):
    makers = {"m0": lambda: pair_m0(args.n), "m1": lambda: pair_m1(args.n),
              "thm1": lambda: pair_thm1(args.q, args.n), "conjecture": lambda: pair_conjecture(args.q, args.n)}
    pair = makers[args.kind]()
    data = pair.as_dict()
    data["distance"] = pair.distance()
    if args.t is not None:
        data["t"] = args.t
        data["intersection"] = pair.intersection(args.t)
    text = f"{pair.x}\n{pair.y}\n" + (f"intersection {data['intersection']}\n" if args.t is not None else "")
    return data, text, _csv(list(data), [list(data.values())])


COMMANDS = {
    "ball": cmd_ball, "intersect": cmd_intersect, "dist": cmd_dist, "formula": cmd_formula,
    "table": cmd_table, "search": cmd_search, "verify": cmd_verify, "code": cmd_code,
    "simulate": cmd_simulate, "pair": cmd_pair,
}


def _fail(args, status: int, reason: str, message: str) -> int:
    if getattr(args, "format", "text") == "json":
        with _sink(getattr(args, "output", None)) as out:
            out.write(json.dumps({"error": {"reason": reason, "message": message}}) + "\n")
    print(f"seqrecon: {message}", file=sys.stderr)
    return status


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except BudgetError as e:
        return _fail(args, EXIT_BUDGET, "budget", str(e))
    except ReconstructionError as e:
        return _fail(args, EXIT_BUDGET if e.reason == "no-source" else EXIT_USAGE, e.reason, str(e))
    except (WordError, F.FormulaError, C.ClaimError, UsageError) as e:
        return _fail(args, EXIT_USAGE, e.reason, str(e))
    except ValueError as e:
        return _fail(args, EXIT_USAGE, "usage", str(e))
    data, text, table, *status = result
    with _sink(args.output) as out:
        if args.format == "json":
            out.write(json.dumps(data) + "\n")
        elif args.format == "csv":
            out.write(table)
        else:
            out.write(text)
    return status[0] if status else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
