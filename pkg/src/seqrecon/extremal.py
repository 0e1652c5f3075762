"""Explicit word pairs whose ball intersections realise the closed forms."""

from __future__ import annotations

import json
from dataclasses import dataclass

from seqrecon.balls import deletion_distance, intersection_size
from seqrecon.words import Word, WordError, a_word, identity_ordering, periodic_word


@dataclass(frozen=True)
class ExtremalPair:
    x: Word
    y: Word
    claimed_distance: int
    formula: str  # M0 | M1 | N_single | N_aux | ThreePower | conjecture-unknown

    def distance(self) -> int:
        if self.x.n >= self.y.n:
            return deletion_distance(self.x, self.y)
        return deletion_distance(self.y, self.x)

    def intersection(self, t: int, k: int = 0) -> int:
        """|D_{t+k}(x) & D_t(y)|."""
        return intersection_size(self.x, t + k, self.y, t)

    def as_dict(self) -> dict:
        return {"x": str(self.x), "y": str(self.y), "claimed_d": self.claimed_distance, "formula": self.formula}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _w(*symbols: int, q: int = 3) -> Word:
    return Word(q, symbols)


def pair_m1(n: int) -> ExtremalPair:
    """x = a_n = (0,1,2,0,1,2,a_{n-6}) and y = (1,0,2,1,0,2,a_{n-6})."""
    if n < 6:
        raise WordError(f"the M1 pair needs n >= 6, got {n}", "invalid-length")
    tail = a_word(n - 6)
    return ExtremalPair(_w(0, 1, 2, 0, 1, 2) + tail, _w(1, 0, 2, 1, 0, 2) + tail, 2, "M1")


def pair_m0(n: int) -> ExtremalPair:
    """x0 = (0,1,2,a_{n-5},c,b), y0 = (1,0,2,a_{n-3}) with (b,c) the last two symbols of a_{n-3}."""
    if n < 6:
        raise WordError(f"the M0 pair needs n >= 6, got {n}", "invalid-length")
    a_n3 = a_word(n - 3)
    b, c = a_n3[n - 5], a_n3[n - 4]
    x0 = _w(0, 1, 2) + a_word(n - 5) + _w(c, b)
    y0 = _w(1, 0, 2) + a_n3
    if n >= 9:
        # second rendering: (0,1,2,0,1,2,a_{n-9},a,c,b), a,b,c the last three of a_{n-6}
        a6 = a_word(n - 6)
        a, b2, c2 = a6[n - 9], a6[n - 8], a6[n - 7]
        alt = _w(0, 1, 2, 0, 1, 2) + a_word(n - 9) + _w(a, c2, b2)
        assert alt == x0 and (b2, c2) == (b, c), "the two renderings of x0 disagree"
    return ExtremalPair(x0, y0, 2, "M0")


def pair_thm1(q: int, n: int) -> ExtremalPair:
    """A periodic word and the same word with its first two symbols swapped."""
    if n < 2:
        raise WordError(f"the single-deletion pair needs n >= 2, got {n}", "invalid-length")
    x = periodic_word(n, identity_ordering(q))
    s = x.symbols
    y = Word(q, (s[1], s[0]) + s[2:])
    return ExtremalPair(x, y, 1, "N_single")


def conjecture_tail(q: int, length: int) -> Word:
    """w_i = i + 1 mod q for i = 1..length."""
    return Word(q, tuple((i + 1) % q for i in range(1, length + 1)))


def pair_conjecture(q: int, n: int) -> ExtremalPair:
    """(0,1,2,0,1,w) and (1,0,2,1,0,w); proposed as extremal for q >= 4 and large n."""
    if q < 4:
        raise WordError(f"the conjectured pair is stated for q >= 4, got q={q}", "invalid-alphabet")
    if n < 5:
        raise WordError(f"the conjectured pair needs n >= 5, got {n}", "invalid-length")
    w = conjecture_tail(q, n - 5)
    return ExtremalPair(_w(0, 1, 2, 0, 1, q=q) + w, _w(1, 0, 2, 1, 0, q=q) + w, 2, "conjecture-unknown")
