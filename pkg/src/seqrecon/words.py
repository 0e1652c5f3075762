"""Words over Z_q, runs, periodic words and the symbol symmetries."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator

MIN_Q = 2
MAX_Q = 6


class WordError(ValueError):
    """Malformed word input. ``reason`` is a machine-readable code."""

    def __init__(self, message: str, reason: str, index: int | None = None):
        super().__init__(message)
        self.reason = reason
        self.index = index


def _check_q(q: int) -> None:
    if not MIN_Q <= q <= MAX_Q:
        raise WordError(f"alphabet size q={q} outside {MIN_Q}..{MAX_Q}", "invalid-alphabet")


@dataclass(frozen=True, order=True)
class Word:
    q: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        _check_q(self.q)
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        for i, s in enumerate(symbols):
            if not 0 <= s < self.q:
                raise WordError(f"symbol {s} at index {i} not in Z_{self.q}", "invalid-symbol", i)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.q, self.symbols[item])
        return self.symbols[item]

    def __add__(self, other: Word) -> Word:
        if other.q != self.q:
            raise WordError("cannot concatenate words over different alphabets", "alphabet-mismatch")
        return Word(self.q, self.symbols + other.symbols)

    def __str__(self) -> str:
        return "".join(map(str, self.symbols))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def index(self) -> int:
        """Base-q value with the first symbol most significant.

        Numeric order of indices equals lexicographic order of equal-length words.
        """
        value = 0
        for s in self.symbols:
            value = value * self.q + s
        return value

    @classmethod
    def from_index(cls, q: int, n: int, index: int) -> Word:
        digits = [0] * n
        for i in range(n - 1, -1, -1):
            index, digits[i] = divmod(index, q)
        if index:
            raise WordError(f"index too large for length {n}", "invalid-index")
        return cls(q, tuple(digits))


def parse_word(text: str, q: int) -> Word:
    """Read the digit-string form, e.g. ``"012012"``; ``""`` is the empty word."""
    _check_q(q)
    symbols = []
    for i, ch in enumerate(text):
        if not ch.isdigit() or not ch.isascii():
            raise WordError(f"non-digit character {ch!r} at index {i}", "parse", i)
        s = int(ch)
        if s >= q:
            raise WordError(f"symbol {s} at index {i} not in Z_{q}", "invalid-symbol", i)
        symbols.append(s)
    return Word(q, tuple(symbols))


def all_words(q: int, n: int) -> Iterator[Word]:
    """Z_q^n in lexicographic order."""
    for i in range(q**n):
        yield Word.from_index(q, n, i)


@dataclass(frozen=True)
class Ordering:
    """A permutation sigma of Z_q, stored as the tuple (sigma(0), ..., sigma(q-1))."""

    q: int
    sigma: tuple[int, ...]

    def __post_init__(self):
        _check_q(self.q)
        object.__setattr__(self, "sigma", tuple(self.sigma))
        if sorted(self.sigma) != list(range(self.q)):
            raise WordError(f"{self.sigma} is not a permutation of Z_{self.q}", "invalid-ordering")

    def __call__(self, s: int) -> int:
        return self.sigma[s]

    def inverse(self) -> Ordering:
        inv = [0] * self.q
        for i, s in enumerate(self.sigma):
            inv[s] = i
        return Ordering(self.q, tuple(inv))

    @classmethod
    def shift(cls, q: int, c: int) -> Ordering:
        """Symbol map s -> s + c mod q."""
        return cls(q, tuple((s + c) % q for s in range(q)))


def identity_ordering(q: int) -> Ordering:
    return Ordering(q, tuple(range(q)))


def periodic_word(n: int, sigma: Ordering) -> Word:
    """c_q(n, sigma): sigma repeated and truncated to length n."""
    if n < 0:
        raise WordError(f"negative length {n}", "invalid-length")
    return Word(sigma.q, tuple(sigma.sigma[i % sigma.q] for i in range(n)))


def a_word(n: int, q: int = 3) -> Word:
    """The identity-ordering periodic word (0, 1, ..., q-1, 0, 1, ...) of length n."""
    return periodic_word(n, identity_ordering(q))


def is_periodic(w: Word) -> bool:
    """True iff w = c_q(n, sigma) for some ordering sigma."""
    head = w.symbols[: w.q]
    if len(set(head)) != len(head):
        return False
    return all(w.symbols[i] == w.symbols[i - w.q] for i in range(w.q, w.n))


@dataclass(frozen=True)
class Run:
    symbol: int
    start: int
    length: int


@dataclass(frozen=True)
class RunDecomposition:
    word: Word
    runs: tuple[Run, ...]

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[Run]:
        return iter(self.runs)

    def expand(self) -> Word:
        symbols: list[int] = []
        for r in self.runs:
            symbols.extend([r.symbol] * r.length)
        return Word(self.word.q, tuple(symbols))


def runs(w: Word) -> RunDecomposition:
    out = []
    start = 0
    for symbol, group in groupby(w.symbols):
        length = sum(1 for _ in group)
        out.append(Run(symbol, start, length))
        start += length
    return RunDecomposition(w, tuple(out))


def relabel(w: Word, pi: Ordering) -> Word:
    if pi.q != w.q:
        raise WordError(f"ordering over Z_{pi.q} applied to word over Z_{w.q}", "alphabet-mismatch")
    return Word(w.q, tuple(pi.sigma[s] for s in w.symbols))


def reverse(w: Word) -> Word:
    return Word(w.q, w.symbols[::-1])


def words_from(q: int, items: Iterable[Iterable[int]]) -> list[Word]:
    return [Word(q, tuple(s)) for s in items]
