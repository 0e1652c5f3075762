"""Closed-form evaluators for deletion-ball maxima and reconstruction counts.

All values are exact Python integers. Out-of-range arguments to the ball
maximum follow the usual conventions (0 outside 0 <= t <= n, 1 on t = n),
so the linear combinations below are defined everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Callable, Iterable

MEMO_MAX_N = 64


class FormulaError(ValueError):
    def __init__(self, message: str, reason: str = "domain"):
        super().__init__(message)
        self.reason = reason


class Formula(str, Enum):
    DQ = "Dq"
    N_SINGLE = "N_single"
    N2_DOUBLE = "N2_double"
    N2_DD = "N2_dd"
    M0 = "M0"
    M1 = "M1"
    F = "f"
    N3_DOUBLE = "N3_double"
    N3_CROSS = "N3_cross"
    N_AUX = "N_aux"


@dataclass(frozen=True)
class FormulaValue:
    formula: Formula
    params: dict = field(compare=True, hash=False)
    value: int

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def as_dict(self) -> dict:
        return {"formula": self.formula.value, **self.params, "value": self.value}


@lru_cache(maxsize=1 << 16)
def _ball_max_cached(q: int, n: int, t: int) -> int:
    return _ball_max(q, n, t)


def _ball_max(q: int, n: int, t: int) -> int:
    if n < 0 or t < 0 or t > n:
        return 0
    if t == n:
        return 1
    if q == 1:
        return 1
    return sum(comb(n - t, i) * D(q - 1, t, t - i) for i in range(min(t, n - t) + 1))


def D(q: int, n: int, t: int) -> int:
    """Maximum size of a radius-t deletion ball in Z_q^n, as a plain int."""
    if q < 1:
        raise FormulaError(f"alphabet size {q} < 1")
    if n > MEMO_MAX_N:
        return _ball_max(q, n, t)
    return _ball_max_cached(q, n, t)


def D3(n: int, t: int) -> int:
    return D(3, n, t)


def D2(n: int, t: int) -> int:
    return D(2, n, t)


def ball_max(q: int, n: int, t: int) -> FormulaValue:
    return FormulaValue(Formula.DQ, {"q": q, "n": n, "t": t}, D(q, n, t))


def _n_single(q: int, n: int, t: int) -> int:
    return sum(D(q, n - i - 1, t - i) for i in range(1, q)) + D(q, n - 2, t - 1)


def n_single(q: int, n: int, t: int) -> FormulaValue:
    """N_q(n, 1, t): largest intersection of radius-t balls around distinct words."""
    if q < 2:
        raise FormulaError(f"q={q} < 2")
    if t < 0 or n < t + 1:
        raise FormulaError(f"N_q(n,1,t) needs n >= t+1 >= 1, got n={n}, t={t}")
    return FormulaValue(Formula.N_SINGLE, {"q": q, "n": n, "t": t}, _n_single(q, n, t))


def n_single_alt(q: int, n: int, t: int) -> int:
    """The difference form D_q(n,t) - D_q(n-1,t) + D_q(n-2,t-1)."""
    return D(q, n, t) - D(q, n - 1, t) + D(q, n - 2, t - 1)


def n2_double(n: int, t: int) -> FormulaValue:
    if t < 2 or n < max(8, 2 * t + 1):
        raise FormulaError(f"N_2(n,2,t) closed form needs t >= 2 and n >= max(8, 2t+1), got n={n}, t={t}")
    value = (
        2 * D2(n - 4, t - 2)
        + 2 * D2(n - 5, t - 2)
        + 2 * D2(n - 7, t - 2)
        + D2(n - 6, t - 3)
        + D2(n - 7, t - 3)
    )
    return FormulaValue(Formula.N2_DOUBLE, {"q": 2, "n": n, "t": t, "d": 2}, value)


def n2_dd(d: int, n: int) -> FormulaValue:
    if d < 1 or n < 4 * d - 2:
        raise FormulaError(f"N_2(n,d,d) needs d >= 1 and n >= 4d-2, got d={d}, n={n}")
    return FormulaValue(Formula.N2_DD, {"q": 2, "n": n, "t": d, "d": d}, comb(2 * d, d))


def _m0(n: int, t: int) -> int:
    return (
        D3(n - 4, t - 2)
        + 3 * D3(n - 5, t - 2)
        + 4 * D3(n - 5, t - 3)
        + 3 * D3(n - 6, t - 3)
        + D3(n - 6, t - 4)
        + 2 * D3(n - 7, t - 3)
        + 2 * D3(n - 7, t - 4)
        + D3(n - 8, t - 4)
        + D3(n - 12, t - 7)
        - D3(n - 10, t - 5)
    )


def _m1(n: int, t: int) -> int:
    return (
        D3(n - 4, t - 2)
        + 5 * D3(n - 5, t - 2)
        + 4 * D3(n - 5, t - 3)
        + 3 * D3(n - 6, t - 3)
        + D3(n - 6, t - 4)
        + D3(n - 8, t - 5)
    )


def m0(n: int, t: int) -> FormulaValue:
    return FormulaValue(Formula.M0, {"n": n, "t": t}, _m0(n, t))


def m1(n: int, t: int) -> FormulaValue:
    return FormulaValue(Formula.M1, {"n": n, "t": t}, _m1(n, t))


def f_expanded(n: int, t: int) -> int:
    """M1 - M0 written out term by term, after cancellation."""
    return (
        D3(n - 5, t - 2)
        + D3(n - 6, t - 2)
        + D3(n - 8, t - 5)
        + D3(n - 10, t - 5)
        - D3(n - 7, t - 3)
        - 2 * D3(n - 7, t - 4)
        - D3(n - 12, t - 7)
    )


def f_gap(n: int, t: int) -> FormulaValue:
    """M1 - M0; the only signed quantity here."""
    return FormulaValue(Formula.F, {"n": n, "t": t}, _m1(n, t) - _m0(n, t))


def _n3_aux(n: int, t: int) -> int:
    return D3(n - 2, t - 1) + 2 * D3(n - 3, t - 1) + D3(n - 3, t - 2) + D3(n - 4, t - 2)


def n3_aux(n: int, t: int) -> FormulaValue:
    return FormulaValue(Formula.N_AUX, {"n": n, "t": t}, _n3_aux(n, t))


def n3_cross(n: int, t: int) -> FormulaValue:
    """N_3(n, t+1, t, 1): x of length n+1 loses t+1 symbols, y of length n loses t."""
    if t < 1 or n < max(4, t):
        raise FormulaError(f"N_3(n,t+1,t,1) closed form needs t >= 1 and n >= max(4,t), got n={n}, t={t}")
    value = _n3_aux(n, t) if 2 * n > 3 * t else 3 ** (n - t)
    return FormulaValue(Formula.N3_CROSS, {"n": n, "t": t, "k": 1, "d": 1}, value)


def n3_cross_value(n: int, t: int) -> int:
    """n3_cross extended by 0 for t <= 0: an empty radius, or y a subsequence of x."""
    if t <= 0:
        return 0
    return n3_cross(n, t).value


N3_SPECIAL = {(4, 2): 4, (5, 2): 6, (5, 3): 8}


def n3_branch(n: int, t: int) -> str:
    """Name of the piecewise branch covering (n, t); raises when none does."""
    if t < 2 or n < t:
        raise FormulaError(f"N_3(n,2,t) closed form needs t >= 2 and n >= t, got n={n}, t={t}")
    if (n, t) in N3_SPECIAL:
        return "special"
    if 2 * n <= 3 * t:
        return "three_power"
    lo = 3 * t // 2 + 1
    if t <= 5 and n >= max(6, lo):
        return "M1"
    if t >= 6 and lo <= n <= 3 * t - 1:
        return "max"
    if t >= 6 and n >= 3 * t:
        return "M1"
    raise FormulaError(f"(n={n}, t={t}) is outside every branch of the N_3(n,2,t) formula", "outside-theorem-range")


def n3_double(n: int, t: int) -> FormulaValue:
    """N_3(n, 2, t) by the piecewise closed form."""
    branch = n3_branch(n, t)
    if branch == "special":
        value = N3_SPECIAL[(n, t)]
    elif branch == "three_power":
        value = 3 ** (n - t)
    elif branch == "M1":
        value = _m1(n, t)
    else:
        value = max(_m0(n, t), _m1(n, t))
    return FormulaValue(Formula.N3_DOUBLE, {"n": n, "t": t, "q": 3, "d": 2, "branch": branch}, value)


def lemma11_bound(n: int, t: int) -> int:
    """Ball-size bound for ternary words that are not periodic."""
    return D3(n - 2, t) + D3(n - 2, t - 1) + D3(n - 3, t - 1) + D3(n - 3, t - 2) + D3(n - 5, t - 3)


# CLI / table names. Both the function name and the formula id are accepted.
EVALUATORS: dict[str, tuple[Formula, Callable[..., FormulaValue], tuple[str, ...]]] = {
    "ball_max": (Formula.DQ, ball_max, ("q", "n", "t")),
    "n_single": (Formula.N_SINGLE, n_single, ("q", "n", "t")),
    "n2_double": (Formula.N2_DOUBLE, n2_double, ("n", "t")),
    "n2_dd": (Formula.N2_DD, lambda n, t: n2_dd(t, n), ("n", "t")),
    "m0": (Formula.M0, m0, ("n", "t")),
    "m1": (Formula.M1, m1, ("n", "t")),
    "f_gap": (Formula.F, f_gap, ("n", "t")),
    "n3_double": (Formula.N3_DOUBLE, n3_double, ("n", "t")),
    "n3_cross": (Formula.N3_CROSS, n3_cross, ("n", "t")),
    "n3_aux": (Formula.N_AUX, n3_aux, ("n", "t")),
}
_ALIASES = {formula.value.lower(): name for name, (formula, _, _) in EVALUATORS.items()}


def resolve(name: str) -> str:
    key = name.lower()
    if key in EVALUATORS:
        return key
    if key in _ALIASES:
        return _ALIASES[key]
    raise FormulaError(f"unknown formula {name!r}; choose from {sorted(EVALUATORS)}", "unknown-formula")


def evaluate(name: str, n: int, t: int, q: int | None = None) -> FormulaValue:
    key = resolve(name)
    _, fn, args = EVALUATORS[key]
    if "q" in args:
        return fn(3 if q is None else q, n, t)
    return fn(n, t)


def table(name: str, n_values: Iterable[int], t_values: Iterable[int], q: int | None = None) -> list[dict]:
    """Rows {n, t, value, formula} over a rectangle; cells outside a formula's domain are skipped."""
    key = resolve(name)
    formula = EVALUATORS[key][0]
    rows = []
    t_values = list(t_values)
    for n in n_values:
        for t in t_values:
            try:
                v = evaluate(key, n, t, q)
            except FormulaError:
                continue
            rows.append({"n": n, "t": t, "value": v.value, "formula": formula.value})
    return rows
