"""Registry of checkable claims: closed form on one side, exhaustive search or
exact enumeration on the other."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import permutations
from math import comb
from typing import Callable

import numpy as np

from seqrecon import formulas as F
from seqrecon.extremal import pair_m0, pair_m1, pair_thm1
from seqrecon.search import SearchSpec, ball_bitsets, max_intersection
from seqrecon.words import Ordering, Word, periodic_word


class ClaimError(ValueError):
    def __init__(self, message: str, reason: str = "out-of-range"):
        super().__init__(message)
        self.reason = reason


@dataclass
class Verification:
    claim: str
    params: dict
    expected: int | str
    observed: int | str
    verdict: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        return asdict(self)


def _record(claim, params, expected, observed, ok, note="") -> Verification:
    return Verification(claim, params, expected, observed, "pass" if ok else "fail", note)


def _search(q, n, t, k=0, d=2, budget=None, workers=1):
    return max_intersection(SearchSpec(q, n, t, k, d), budget=budget, workers=workers)


def theorem1(q: int, n: int, t: int, budget=None, workers=1) -> Verification:
    if q not in (2, 3, 4) or t < 1 or n < t + 1:
        raise ClaimError(f"theorem1 needs q in 2..4 and n >= t+1 >= 2, got q={q}, n={n}, t={t}")
    expected = F.n_single(q, n, t).value
    observed = _search(q, n, t, d=1, budget=budget, workers=workers).maximum
    pair = pair_thm1(q, n)
    attained = pair.intersection(t)
    ok = observed == expected and attained == expected and pair.distance() == 1
    return _record("theorem1", {"q": q, "n": n, "t": t}, expected, observed, ok, f"pair attains {attained}")


def theorem2(n: int, t: int, budget=None, workers=1) -> Verification:
    expected = F.n2_double(n, t).value
    observed = _search(2, n, t, d=2, budget=budget, workers=workers).maximum
    return _record("theorem2", {"n": n, "t": t}, expected, observed, observed == expected)


def theorem3(d: int, n: int, budget=None, workers=1) -> Verification:
    expected = F.n2_dd(d, n).value
    observed = _search(2, n, d, d=d, budget=budget, workers=workers).maximum
    return _record("theorem3", {"d": d, "n": n}, expected, observed, observed == expected)


def theorem4(n: int, t: int, budget=None, workers=1) -> Verification:
    value = F.n3_double(n, t)
    observed = _search(3, n, t, d=2, budget=budget, workers=workers)
    note = f"branch {value.params['branch']}"
    if observed.maximum != value.value and observed.witnesses:
        x, y, _ = observed.witnesses[0]
        note += f"; witness x={x} y={y}"
    return _record("theorem4", {"n": n, "t": t}, value.value, observed.maximum, observed.maximum == value.value, note)


def theorem5(n: int, t: int, **_) -> Verification:
    """The two explicit pairs realise M0 and M1 (deletion-distance 2 included)."""
    if t < 2 or n < max(9, 3 * t // 2 + 1):
        raise ClaimError(f"theorem5 needs t >= 2 and n >= max(9, floor(3t/2)+1), got n={n}, t={t}")
    p1, p0 = pair_m1(n), pair_m0(n)
    got = (p0.intersection(t), p1.intersection(t))
    want = (F.m0(n, t).value, F.m1(n, t).value)
    ok = got == want and p0.distance() == 2 and p1.distance() == 2
    return _record("theorem5", {"n": n, "t": t}, f"M0={want[0]},M1={want[1]}", f"M0={got[0]},M1={got[1]}", ok)


def lemma6(n: int, budget=None, workers=1) -> Verification:
    if n < 4:
        raise ClaimError(f"lemma6 needs n >= 4, got {n}")
    observed = _search(3, n, 1, k=1, d=1, budget=budget, workers=workers).maximum
    return _record("lemma6", {"n": n}, "<=3", observed, observed <= 3)


def lemma7(n: int, t: int, budget=None, workers=1) -> Verification:
    expected = F.n3_cross(n, t).value
    observed = _search(3, n, t, k=1, d=1, budget=budget, workers=workers).maximum
    return _record("lemma7", {"n": n, "t": t}, expected, observed, observed == expected)


def _periodic_indices(q: int, n: int) -> set[int]:
    return {periodic_word(n, Ordering(q, p)).index for p in permutations(range(q))}


def non_periodic_ball_max(n: int, t: int, q: int = 3) -> tuple[int, Word | None]:
    """Largest |D_t(x)| over x in Z_q^n outside c_q(n), by full enumeration."""
    sizes = np.bitwise_count(ball_bitsets(q, n, t)).sum(axis=1, dtype=np.int64)
    mask = np.ones(len(sizes), dtype=bool)
    mask[list(_periodic_indices(q, n))] = False
    if not mask.any():
        return 0, None
    masked = np.where(mask, sizes, -1)
    i = int(masked.argmax())
    return int(masked[i]), Word.from_index(q, n, i)


def lemma11(n: int, t: int, **_) -> Verification:
    if t < 0 or n < t + 2:
        raise ClaimError(f"lemma11 needs n >= t+2, got n={n}, t={t}")
    bound = F.lemma11_bound(n, t)
    observed, arg = non_periodic_ball_max(n, t)
    note = "bound attained" if observed == bound else f"max at x={arg}"
    return _record("lemma11", {"n": n, "t": t}, f"<={bound}", observed, observed <= bound, note)


def lemma15(k: int, **_) -> Verification:
    a, b = F.f_gap(3 * k + 1, 2 * k).value, F.f_gap(3 * k + 2, 2 * k + 1).value
    return _record("lemma15", {"k": k}, "f=-1,f=0", f"f={a},f={b}", (a, b) == (-1, 0))


def identity_failures(n_max: int = 60, t_max: int = 30, m_t_max: int = 20) -> dict[str, list]:
    """Failing cells per grid identity; every list is empty when the identity holds.

    The M_i recurrence is taken literally: every n >= t+1 with t <= m_t_max.
    f is compared with its expansion where M0 and M1 are used (n >= max(9, floor(3t/2)+1)).
    """
    D3 = F.D3
    out: dict[str, list] = {"recurrence": [], "regime": [], "factor3": [], "m_recurrence": [], "f_expansion": []}
    for t in range(t_max + 1):
        for n in range(t, n_max + 1):
            if n >= t + 1:
                if D3(n, t) != D3(n - 1, t) + D3(n - 2, t - 1) + D3(n - 3, t - 2):
                    out["recurrence"].append((n, t))
                if D3(n, t) > 3 * D3(n - 1, t):
                    out["factor3"].append((n, t))
                if t <= m_t_max:
                    for fn in (F._m0, F._m1):
                        if fn(n, t) != fn(n - 1, t) + fn(n - 2, t - 1) + fn(n - 3, t - 2):
                            out["m_recurrence"].append((fn.__name__.lstrip("_"), n, t))
            if 3 * t >= 2 * n and D3(n, t) != 3 ** (n - t):
                out["regime"].append((n, t))
            if t >= 2 and n >= max(9, 3 * t // 2 + 1) and F.f_gap(n, t).value != F.f_expanded(n, t):
                out["f_expansion"].append((n, t))
    return out


def _identity_record(claim, keys, n_max, t_max):
    found = identity_failures(n_max, t_max)
    bad = {k: found[k] for k in keys if found[k]}
    note = "; ".join(f"{k}: {len(v)} cells, first {v[:3]}" for k, v in bad.items())
    return _record(claim, {"n_max": n_max, "t_max": t_max}, "no failures",
                   ",".join(bad) or "no failures", not bad, note)


def identities(n_max: int = 60, t_max: int = 30, **_) -> Verification:
    """Ball-maximum recurrence, the 3^(n-t) regime, the factor-3 bound and the f expansion."""
    return _identity_record("identities", ("recurrence", "regime", "factor3", "f_expansion"), n_max, t_max)


def m_recurrence(n_max: int = 60, t_max: int = 20, **_) -> Verification:
    """M_i(n,t) = M_i(n-1,t) + M_i(n-2,t-1) + M_i(n-3,t-2) for i in {0, 1}, every n >= t+1."""
    return _identity_record("m_recurrence", ("m_recurrence",), n_max, t_max)


def _upper_grid(n_max: int):
    for t in range(2, n_max + 1):
        for n in range(max(9, 3 * t // 2 + 1), n_max + 1):
            yield n, t


def f_positive(t_min: int = 6, t_max: int = 10, n_max: int = 50, **_) -> Verification:
    bad = [(n, t) for t in range(t_min, t_max + 1) for n in range(3 * t, n_max + 1) if F.f_gap(n, t).value <= 0]
    return _record("f_positive", {"t_min": t_min, "t_max": t_max, "n_max": n_max}, "f>0", f"{len(bad)} failures",
                   not bad, ", ".join(map(str, bad[:5])))


def lemma16(n_max: int = 50, **_) -> Verification:
    bad, checked = [], 0
    for n, t in _upper_grid(n_max):
        for i in (1, 2):
            if 2 * (n - i) <= 3 * (t - i + 1):
                checked += 1
                if F._m1(n - i, t - i + 1) != 3 ** (n - t - 1):
                    bad.append((n, t, i))
    return _record("lemma16", {"n_max": n_max}, f"{checked} equalities", f"{len(bad)} failures", not bad,
                   ", ".join(map(str, bad[:5])))


def lemma17(n_max: int = 50, **_) -> Verification:
    X, M0, M1 = F.n3_cross_value, F._m0, F._m1
    bad = []
    for t in range(2, n_max + 1):
        for n in range(t + 4, n_max + 1):
            if F.D3(n - 2, t - 2) > min(M0(n, t), M1(n, t)):
                bad.append(("first", n, t))
    for n, t in _upper_grid(n_max):
        for Mi in (M0, M1):
            if Mi(n - 1, t) + 2 * X(n - 3, t - 2) > M1(n, t):
                bad.append((Mi.__name__, n, t))
    return _record("lemma17", {"n_max": n_max}, "no failures", f"{len(bad)} failures", not bad,
                   ", ".join(map(str, bad[:5])))


def lemma18(n_max: int = 50, **_) -> Verification:
    X, M0, M1 = F.n3_cross_value, F._m0, F._m1
    bad = []
    for n, t in _upper_grid(n_max):
        rhs = M1(n - 3, t - 2) + M1(n - 2, t - 1)
        checks = [
            F.D3(n - 4, t - 3) <= X(n - 3, t - 2),
            X(n - 4, t - 3) <= M1(n - 3, t - 2),
            M0(n - 2, t - 1) + X(n - 4, t - 3) <= rhs,
            M0(n - 3, t - 1) + 2 * X(n - 5, t - 3) + M0(n - 3, t - 2) <= rhs,
            M1(n - 3, t - 1) + 2 * X(n - 5, t - 3) + M0(n - 3, t - 2) <= rhs,
        ]
        bad.extend((i, n, t) for i, ok in enumerate(checks) if not ok)
    return _record("lemma18", {"n_max": n_max}, "no failures", f"{len(bad)} failures", not bad,
                   ", ".join(map(str, bad[:5])))


CLAIMS: dict[str, Callable[..., Verification]] = {
    "theorem1": theorem1,
    "theorem2": theorem2,
    "theorem3": theorem3,
    "theorem4": theorem4,
    "theorem5": theorem5,
    "lemma6": lemma6,
    "lemma7": lemma7,
    "lemma11": lemma11,
    "lemma15": lemma15,
    "f_positive": f_positive,
    "lemma16": lemma16,
    "lemma17": lemma17,
    "lemma18": lemma18,
    "identities": identities,
    "m_recurrence": m_recurrence,
}


def verify_claim(claim: str, **params) -> Verification:
    try:
        fn = CLAIMS[claim.lower()]
    except KeyError:
        raise ClaimError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}", "unknown-claim") from None
    try:
        return fn(**params)
    except F.FormulaError as e:
        raise ClaimError(str(e)) from e


@dataclass
class Sweep:
    name: str
    rows: list[Verification] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def desk_cells() -> dict[str, list[tuple[str, dict]]]:
    """The desk-scale sweep: (claim, params) per group."""
    cells: dict[str, list[tuple[str, dict]]] = {}
    cells["special values"] = [("theorem4", {"n": n, "t": t}) for n, t in ((4, 2), (5, 2), (5, 3))]
    cells["theorem4"] = [("theorem4", {"n": n, "t": t}) for t in (2, 3, 4, 5) for n in range(t, 9)]
    cells["theorem5"] = [("theorem5", {"n": n, "t": t}) for t in range(2, 7)
                         for n in range(max(9, 3 * t // 2 + 1), 21)]
    cells["theorem1"] = [("theorem1", {"q": q, "n": n, "t": t}) for q in (2, 3)
                         for n in range(2, 8) for t in range(1, n)]
    cells["theorem2"] = [("theorem2", {"n": n, "t": 2}) for n in (8, 9, 10)]
    cells["theorem3"] = [("theorem3", {"d": d, "n": n}) for d in (1, 2) for n in range(4 * d - 2, 11)]
    cells["lemma7"] = [("lemma7", {"n": n, "t": t}) for n in range(4, 8) for t in range(1, n + 1)]
    cells["lemma6"] = [("lemma6", {"n": n}) for n in range(4, 8)]
    cells["lemma11"] = [("lemma11", {"n": n, "t": t}) for n in range(4, 9) for t in range(1, n - 1)]
    cells["lemma15"] = [("lemma15", {"k": k}) for k in range(3, 13)]
    cells["lemma15"].append(("f_positive", {}))
    cells["inequalities"] = [("lemma16", {}), ("lemma17", {}), ("lemma18", {})]
    cells["identities"] = [("identities", {}), ("m_recurrence", {})]
    return cells


def run_cells(name: str, cells, budget=None, workers=1) -> Sweep:
    sweep = Sweep(name)
    for claim, params in cells:
        extra = {"budget": budget, "workers": workers} if claim in _SEARCHING else {}
        sweep.rows.append(verify_claim(claim, **params, **extra))
    return sweep


_SEARCHING = {"theorem1", "theorem2", "theorem3", "theorem4", "lemma6", "lemma7"}


def desk_sweep(budget=None, workers=1) -> list[Sweep]:
    return [run_cells(name, cells, budget, workers) for name, cells in desk_cells().items()]
