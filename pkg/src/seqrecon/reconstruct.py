"""Reconstruction from several deletion channels.

A codeword goes through N channels, each deleting exactly t symbols and all
producing distinct outputs. The decoder keeps the codewords whose radius-t
ball contains every output. With N_q(n, d, t) + 1 distinct outputs the
candidate is unique for any code of minimum deletion distance d.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable

import numpy as np

from seqrecon import formulas as F
from seqrecon.balls import BudgetError, WordSet, ball_size, enumerate_ball, intersection_size, is_subsequence
from seqrecon.search import SearchSpec, max_intersection
from seqrecon.words import Word, WordError, all_words

CODE_BUDGET = 10**6
RETRY_FACTOR = 10**4


class ReconstructionError(RuntimeError):
    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Code:
    q: int
    n: int
    d_min: int
    codewords: WordSet

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def as_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "d_min": self.d_min, "size": len(self), "codewords": self.codewords.strings()}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def build_code(q: int, n: int, d_min: int, budget: int = CODE_BUDGET) -> Code:
    """Greedy lexicographic code: keep a word iff it is at distance >= d_min from all kept words.

    For equal lengths, d_L(x, y) >= d iff the radius-(d-1) balls are disjoint,
    so one running union of kept balls decides each word.
    """
    if q < 2 or n < 1 or d_min < 1:
        raise ValueError(f"build_code needs q >= 2, n >= 1, d_min >= 1; got q={q}, n={n}, d_min={d_min}")
    if q**n > budget:
        raise BudgetError(f"greedy scan over {q**n} words exceeds budget {budget}", q**n, budget)
    if d_min > n:
        # d_L never exceeds n, so only one word fits
        return Code(q, n, d_min, WordSet.of(q, n, [Word(q, (0,) * n)]))
    kept = []
    covered: set = set()
    for w in all_words(q, n):
        ball = set(enumerate_ball(w, d_min - 1))
        if ball.isdisjoint(covered):
            kept.append(w)
            covered |= ball
    return Code(q, n, d_min, WordSet.of(q, n, kept))


def required_channels(q: int, n: int, t: int, d_min: int, prefer: str = "closed-form",
                      budget: int | None = None) -> tuple[int, str]:
    """(N_q(n, d_min, t) + 1, source). The source is the closed-form id or ``"search"``."""
    if prefer not in ("closed-form", "search"):
        raise ValueError(f"prefer must be 'closed-form' or 'search', got {prefer!r}")
    if prefer == "closed-form":
        value = _closed_form(q, n, t, d_min)
        if value is not None:
            return value.value + 1, value.formula.value
    try:
        report = max_intersection(SearchSpec(q, n, t, 0, d_min), budget=budget)
    except BudgetError as e:
        raise ReconstructionError(f"no closed form covers (q={q}, n={n}, t={t}, d={d_min}) and {e}",
                                  "no-source") from e
    return report.maximum + 1, "search"


def _closed_form(q, n, t, d):
    try:
        if d == 1:
            return F.n_single(q, n, t)
        if q == 3 and d == 2:
            return F.n3_double(n, t)
        if q == 2 and d == 2:
            return F.n2_double(n, t)
        if q == 2 and d == t:
            return F.n2_dd(d, n)
    except F.FormulaError:
        return None
    return None


@dataclass(frozen=True)
class ChannelBatch:
    source: Word
    t: int
    outputs: WordSet
    mode: str
    draws: int = 0


def _delete(c: Word, positions) -> Word:
    drop = set(positions)
    return Word(c.q, tuple(s for i, s in enumerate(c.symbols) if i not in drop))


def channel_outputs(c: Word, t: int, mode: str = "random", seed: int | np.random.Generator = 0,
                    target_distinct: int = 1, accept: Callable[[Word], bool] | None = None) -> ChannelBatch:
    """Collect ``target_distinct`` distinct t-deletion outputs of c.

    Random mode deletes a uniform t-subset of positions per draw (PCG64
    generator) and resamples until enough distinct outputs are seen.
    Adversarial mode takes the lexicographically first ball members passing
    ``accept``, which lets a caller pick worst-case outputs.
    """
    if not 0 <= t <= c.n:
        raise ReconstructionError(f"t={t} outside 0..{c.n}", "invalid-radius")
    size = ball_size(c, t)
    if target_distinct > size:
        raise ReconstructionError(f"only {size} distinct outputs exist, {target_distinct} requested",
                                  "target-exceeds-ball")
    if mode == "adversarial":
        chosen = [w for w in enumerate_ball(c, t) if accept is None or accept(w)][:target_distinct]
        if len(chosen) < target_distinct:
            raise ReconstructionError(f"filter left {len(chosen)} outputs, {target_distinct} requested",
                                      "target-exceeds-ball")
        outputs, draws = chosen, 0
    elif mode == "random":
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        found: set[Word] = set()
        draws = 0
        limit = RETRY_FACTOR * max(1, target_distinct)
        while len(found) < target_distinct:
            if draws >= limit:
                raise ReconstructionError(f"{draws} draws gave only {len(found)} distinct outputs", "retry-limit")
            draws += 1
            found.add(_delete(c, rng.choice(c.n, size=t, replace=False).tolist()))
        outputs = list(found)
    else:
        raise ValueError(f"unknown channel mode {mode!r}")
    for w in outputs:
        assert w.n == c.n - t and is_subsequence(w, c), f"{w} is not a {t}-subsequence of {c}"
    return ChannelBatch(c, t, WordSet.of(c.q, c.n - t, outputs), mode, draws)


class Verdict(str, Enum):
    UNIQUE = "unique"
    AMBIGUOUS = "ambiguous"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class ReconstructionOutcome:
    candidates: WordSet
    verdict: Verdict

    @property
    def decoded(self) -> Word | None:
        return self.candidates.members[0] if self.verdict is Verdict.UNIQUE else None


def decode(code: Code, outputs, t: int) -> ReconstructionOutcome:
    outputs = list(outputs)
    lengths = {w.n for w in outputs}
    if len(lengths) > 1:
        raise WordError(f"channel outputs have mixed lengths {sorted(lengths)}", "mixed-length")
    if lengths and lengths.pop() != code.n - t:
        raise WordError(f"outputs must have length {code.n - t}", "mixed-length")
    hits = [c for c in code if all(is_subsequence(o, c) for o in outputs)]
    verdict = Verdict.UNIQUE if len(hits) == 1 else Verdict.INCONSISTENT if not hits else Verdict.AMBIGUOUS
    return ReconstructionOutcome(WordSet.of(code.q, code.n, hits), verdict)


@dataclass
class SimulationReport:
    q: int
    n: int
    t: int
    d_min: int
    seed: int
    trials: int
    channels: int
    threshold: int
    source: str
    eligible: int
    code_size: int
    unique: int = 0
    ambiguous: int = 0
    inconsistent: int = 0

    def as_dict(self) -> dict:
        return {
            "params": {"q": self.q, "n": self.n, "t": self.t, "d_min": self.d_min, "seed": self.seed,
                       "channels": self.channels, "source": self.source, "code_size": self.code_size,
                       "eligible_codewords": self.eligible},
            "trials": self.trials,
            "unique": self.unique,
            "ambiguous": self.ambiguous,
            "inconsistent": self.inconsistent,
            "threshold": self.threshold,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def simulate(q: int, n: int, t: int, d_min: int, trials: int, seed: int = 0, channels: int | None = None,
             code: Code | None = None) -> SimulationReport:
    """Decode ``trials`` random transmissions; ``channels`` defaults to the guaranteed threshold.

    Only codewords whose ball holds at least ``channels`` distinct outputs
    can be sent, since the model needs that many distinct channel outputs.
    Trial i draws from its own generator spawned from the master seed, so
    results do not depend on how trials are scheduled.
    """
    code = code or build_code(q, n, d_min)
    threshold, source = required_channels(q, n, t, d_min)
    channels = threshold if channels is None else channels
    words = [c for c in code if ball_size(c, t) >= channels]
    if not words:
        raise ReconstructionError(f"no codeword has {channels} distinct {t}-deletion outputs", "target-exceeds-ball")
    report = SimulationReport(q, n, t, d_min, seed, trials, channels, threshold, source, len(words), len(code))
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        c = words[int(rng.integers(len(words)))]
        batch = channel_outputs(c, t, "random", rng, channels)
        outcome = decode(code, batch.outputs, t)
        if outcome.verdict is Verdict.UNIQUE:
            assert outcome.decoded == c
            report.unique += 1
        elif outcome.verdict is Verdict.AMBIGUOUS:
            report.ambiguous += 1
        else:
            report.inconsistent += 1
    return report


def ambiguity_witness(code: Code, t: int, channels: int):
    """Two codewords and ``channels`` shared outputs that the decoder cannot separate, or None."""
    words = code.codewords.members
    for i, c in enumerate(words):
        for c2 in words[i + 1 :]:
            if intersection_size(c, t, c2, t) >= channels:
                common = sorted(set(enumerate_ball(c, t)) & set(enumerate_ball(c2, t)))[:channels]
                return c, c2, WordSet.of(code.q, code.n - t, common)
    return None


@dataclass
class SharpnessReport:
    max_pair_intersection: int
    subsets_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def exhaustive_sharpness(code: Code, t: int, channels: int) -> SharpnessReport:
    """Decode every ``channels``-subset of every codeword's ball.

    Ball members are indexed per codeword and the other codewords' balls are
    kept as bitmasks over those indices; a subset decodes to c' as well iff
    it fits inside c''s mask.
    """
    words = code.codewords.members
    balls = [frozenset(enumerate_ball(c, t)) for c in words]
    worst = 0
    checked = 0
    failures = []
    for i, c in enumerate(words):
        members = sorted(balls[i])
        masks = []
        for j, other in enumerate(balls):
            if j == i:
                continue
            mask = 0
            for b, w in enumerate(members):
                if w in other:
                    mask |= 1 << b
            worst = max(worst, mask.bit_count())
            if mask:
                masks.append((words[j], mask))
        for subset in combinations(range(len(members)), channels):
            checked += 1
            s = 0
            for b in subset:
                s |= 1 << b
            rivals = [w for w, m in masks if s & m == s]
            if rivals:
                failures.append((c, rivals[0], [members[b] for b in subset]))
    return SharpnessReport(worst, checked, failures)
