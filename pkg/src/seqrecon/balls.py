"""Deletion balls D_t(x), their intersections, and the deletion distance.

Two independent routes are kept on purpose: ``enumerate_ball`` /
``intersect_balls`` materialise sets by repeated single deletions, while
``ball_size`` / ``intersection_size`` count distinct subsequences with a
dynamic program and never build the sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator

from seqrecon.words import Word, WordError

DEFAULT_CAP = 2**24


class BudgetError(RuntimeError):
    """A computation was refused because its size estimate exceeds the budget."""

    def __init__(self, message: str, estimate: int, budget: int):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


@dataclass(frozen=True)
class WordSet:
    """Deduplicated, lexicographically sorted words of one length over one alphabet."""

    q: int
    m: int
    members: tuple[Word, ...]

    @classmethod
    def of(cls, q: int, m: int, words: Iterable[Word]) -> WordSet:
        members = tuple(sorted(set(words)))
        for w in members:
            if w.q != q or w.n != m:
                raise WordError(f"{w} does not belong to Z_{q}^{m}", "mixed-length")
        return cls(q, m, members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.members)

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, w) -> bool:
        return w in self._lookup

    def strings(self) -> list[str]:
        return [str(w) for w in self.members]

    def to_json(self) -> str:
        return json.dumps(self.strings())

    def to_lines(self) -> str:
        return "".join(s + "\n" for s in self.strings())

    @classmethod
    def from_strings(cls, q: int, items: Iterable[str]) -> WordSet:
        from seqrecon.words import parse_word

        words = [parse_word(s, q) for s in items]
        lengths = {w.n for w in words}
        if len(lengths) > 1:
            raise WordError(f"mixed lengths {sorted(lengths)}", "mixed-length")
        return cls.of(q, lengths.pop() if lengths else 0, words)


def _ball_bound(n: int, t: int, q: int) -> int:
    # both q^(n-t) and C(n,t) bound |D_t(x)|
    return min(q ** (n - t), comb(n, t))


def _guard(n: int, t: int, q: int, cap: int) -> None:
    bound = _ball_bound(n, t, q)
    if bound > cap:
        raise BudgetError(
            f"deletion ball of radius {t} around a length-{n} word may hold {bound} > {cap} words",
            bound,
            cap,
        )


def _ball_tuples(x: Word, t: int, cap: int) -> set[tuple[int, ...]]:
    n = x.n
    if t < 0 or t > n:
        return set()
    _guard(n, t, x.q, cap)
    level = {x.symbols}
    for _ in range(t):
        nxt = set()
        for w in level:
            for i in range(len(w)):
                nxt.add(w[:i] + w[i + 1 :])
        if len(nxt) > cap:
            raise BudgetError(f"intermediate deletion level exceeded {cap} words", len(nxt), cap)
        level = nxt
    return level


def enumerate_ball(x: Word, t: int, cap: int = DEFAULT_CAP) -> WordSet:
    """All distinct words obtained from x by deleting exactly t symbols."""
    m = x.n - t
    members = _ball_tuples(x, t, cap)
    return WordSet.of(x.q, max(m, 0), (Word(x.q, s) for s in members))


def _next_table(s: tuple[int, ...], q: int) -> list[list[int]]:
    """nxt[i][a] = first position >= i holding symbol a, or -1."""
    n = len(s)
    nxt = [[-1] * q for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row = nxt[i + 1][:]
        row[s[i]] = i
        nxt[i] = row
    return nxt


def ball_size(x: Word, t: int) -> int:
    """|D_t(x)| by counting distinct subsequences of length n - t.

    Every distinct subsequence has exactly one leftmost embedding, so
    counting leftmost embeddings symbol by symbol counts each once.
    """
    n, q = x.n, x.q
    m = n - t
    if t < 0 or m < 0:
        return 0
    nxt = _next_table(x.symbols, q)
    # cnt[i] = number of distinct length-L subsequences of x[i:], for the current L
    cnt = [1] * (n + 1)
    for _ in range(m):
        new = [0] * (n + 1)
        for i in range(n + 1):
            total = 0
            for p in nxt[i]:
                if p >= 0:
                    total += cnt[p + 1]
            new[i] = total
        cnt = new
    return cnt[0]


def intersection_size(x: Word, tx: int, y: Word, ty: int) -> int:
    """|D_tx(x) & D_ty(y)| without materialising either ball."""
    if x.q != y.q:
        raise WordError("words over different alphabets", "alphabet-mismatch")
    m = x.n - tx
    if tx < 0 or ty < 0 or m < 0 or y.n - ty != m:
        return 0
    q = x.q
    nx, ny = x.n, y.n
    nxt_x = _next_table(x.symbols, q)
    nxt_y = _next_table(y.symbols, q)
    cnt = [[1] * (ny + 1) for _ in range(nx + 1)]
    for _ in range(m):
        new = [[0] * (ny + 1) for _ in range(nx + 1)]
        for i in range(nx + 1):
            rx = nxt_x[i]
            row = new[i]
            for j in range(ny + 1):
                ry = nxt_y[j]
                total = 0
                for a in range(q):
                    pi, pj = rx[a], ry[a]
                    if pi >= 0 and pj >= 0:
                        total += cnt[pi + 1][pj + 1]
                row[j] = total
        cnt = new
    return cnt[0][0]


def intersect_balls(x: Word, tx: int, y: Word, ty: int, cap: int = DEFAULT_CAP) -> WordSet:
    if x.q != y.q:
        raise WordError("words over different alphabets", "alphabet-mismatch")
    m = x.n - tx
    if tx < 0 or ty < 0 or m < 0 or y.n - ty != m:
        return WordSet(x.q, max(m, 0), ())
    common = _ball_tuples(x, tx, cap) & _ball_tuples(y, ty, cap)
    return WordSet.of(x.q, m, (Word(x.q, s) for s in common))


def lcs_length(x: Word, y: Word) -> int:
    prev = [0] * (y.n + 1)
    for a in x.symbols:
        cur = [0] * (y.n + 1)
        for j, b in enumerate(y.symbols, 1):
            cur[j] = prev[j - 1] + 1 if a == b else max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def deletion_distance(x: Word, y: Word) -> int:
    """d_L(x, y) for |x| >= |y|: the fewest deletions from y (and |x|-|y| more
    from x) that leave a common word, i.e. |y| - LCS(x, y)."""
    if x.n < y.n:
        raise ValueError("deletion_distance expects |x| >= |y|; swap the arguments")
    return y.n - lcs_length(x, y)


def is_subsequence(u: Word, x: Word) -> bool:
    it = iter(x.symbols)
    return all(s in it for s in u.symbols)
