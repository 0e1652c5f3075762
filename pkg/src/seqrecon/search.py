"""Exhaustive maximisation of |D_{t+k}(x) & D_t(y)| over word pairs at distance >= d.

Every word of a given length is identified with its base-q index, and its
deletion ball is stored as a packed bitset over Z_q^(n-t). An intersection
size is then a popcount of an AND, evaluated for a block of x against all y
at once. The deletion-distance filter uses the same trick one level up:
d_L(x, y) >= d iff the radius-(d-1) balls (x gets k more) are disjoint.

Only canonical x are scanned: the least word in its orbit under all symbol
relabelings (and, when k = 0, reversal). The objective and the distance are
invariant when the same map is applied to both words, so the maximum is
unchanged; the exact number of maximising pairs is recovered by weighting
each canonical x with its orbit size.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np

from seqrecon.balls import BudgetError
from seqrecon.words import Word

DEFAULT_BUDGET = 10**10
MEMORY_BUDGET = 2**31
BLOCK_BYTES = 1 << 25
CHECK_CHUNK = 1 << 16


def default_budget() -> int:
    return int(os.environ.get("SEQRECON_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class SearchSpec:
    q: int
    n: int
    t: int
    k: int = 0
    d: int = 2
    reduce: bool = True
    witness_cap: int = 64

    def __post_init__(self):
        if self.q < 2 or self.n < 1 or self.t < 0 or self.k < 0 or self.d < 0:
            raise ValueError(f"invalid search spec {self}")


@dataclass
class SearchReport:
    spec: SearchSpec
    maximum: int
    witness_count: int
    witnesses: list[tuple[Word, Word, int]] = field(default_factory=list)
    pairs_examined: int = 0
    classes_examined: int = 0
    elapsed_ms: float = 0.0

    def as_dict(self) -> dict:
        return {
            "spec": asdict(self.spec),
            "maximum": self.maximum,
            "witness_count": self.witness_count,
            "witnesses": [{"x": str(x), "y": str(y), "size": s} for x, y, s in self.witnesses],
            "pairs_examined": self.pairs_examined,
            "classes_examined": self.classes_examined,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def digits(q: int, n: int) -> np.ndarray:
    """Row i holds the symbols of the i-th word of Z_q^n (lexicographic order)."""
    idx = np.arange(q**n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def _indices(q: int, digs: np.ndarray) -> np.ndarray:
    n = digs.shape[1]
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return digs @ powers if n else np.zeros(len(digs), dtype=np.int64)


def ball_bitsets(q: int, n: int, t: int) -> np.ndarray:
    """Packed radius-t deletion balls of every word in Z_q^n, shape (q^n, ceil(q^(n-t)/64))."""
    m = n - t
    digs = digits(q, n)
    words = -(-(q**m) // 64)
    bits = np.zeros((len(digs), words), dtype=np.uint64)
    rows = np.arange(len(digs))
    powers = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    for keep in combinations(range(n), m):
        sub = digs[:, list(keep)] @ powers if m else np.zeros(len(digs), dtype=np.int64)
        bits[rows, sub >> 6] |= np.left_shift(np.uint64(1), (sub & 63).astype(np.uint64))
    return bits


def symmetry_images(q: int, n: int, with_reversal: bool) -> np.ndarray:
    """Indices of g(x) for every x in Z_q^n and every symmetry g, shape (|G|, q^n)."""
    digs = digits(q, n)
    images = []
    for perm in permutations(range(q)):
        mapped = np.asarray(perm, dtype=np.int64)[digs]
        images.append(_indices(q, mapped))
        if with_reversal:
            images.append(_indices(q, mapped[:, ::-1]))
    return np.stack(images)


def canonical_classes(q: int, n: int, with_reversal: bool) -> tuple[np.ndarray, np.ndarray]:
    """Canonical representatives (ascending) and their orbit sizes."""
    images = symmetry_images(q, n, with_reversal)
    idx = np.arange(q**n, dtype=np.int64)
    reps = np.flatnonzero(images.min(axis=0) == idx)
    orbit = np.sort(images[:, reps], axis=0)
    sizes = 1 + (np.diff(orbit, axis=0) != 0).sum(axis=0)
    return reps, sizes


def estimate_work(spec: SearchSpec) -> tuple[int, int]:
    """(word-operations, bytes) the scan would need."""
    q, n, t, k, d = spec.q, spec.n, spec.t, spec.k, spec.d
    nx, ny = q ** (n + k), q**n
    w_int = -(-(q ** max(n - t, 0)) // 64)
    w_dist = -(-(q ** max(n - d + 1, 0)) // 64) if d > 0 else 0
    group = factorial(q) * (2 if k == 0 else 1) if spec.reduce else 1
    xs = max(1, nx // group)
    work = xs * ny * w_int + (nx * comb(n + k, min(t + k, n + k)) if n >= t else 0)
    memory = 8 * ((nx + ny) * (w_int + w_dist))
    return work, memory


@dataclass
class _Context:
    q: int
    n: int
    t: int
    k: int
    d: int
    xbits: np.ndarray
    ybits: np.ndarray
    xdist: np.ndarray | None
    ydist: np.ndarray | None


_CTX: _Context | None = None


def _build_context(spec: SearchSpec) -> _Context:
    q, n, t, k, d = spec.q, spec.n, spec.t, spec.k, spec.d
    xbits = ball_bitsets(q, n + k, t + k)
    ybits = ball_bitsets(q, n, t)
    xdist = ydist = None
    if d > 0:
        if d - 1 <= n:
            xdist = ball_bitsets(q, n + k, d - 1 + k)
            ydist = ball_bitsets(q, n, d - 1)
    return _Context(q, n, t, k, d, xbits, ybits, xdist, ydist)


def _valid(ctx: _Context, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    if ctx.d == 0:
        return np.ones(len(xs), dtype=bool)
    if ctx.xdist is None:
        # d > n: every pair has distance <= n
        return np.zeros(len(xs), dtype=bool)
    out = np.empty(len(xs), dtype=bool)
    for s in range(0, len(xs), CHECK_CHUNK):
        a = ctx.xdist[xs[s : s + CHECK_CHUNK]]
        b = ctx.ydist[ys[s : s + CHECK_CHUNK]]
        out[s : s + CHECK_CHUNK] = ~(a & b).any(axis=1)
    return out


def _scan(ctx: _Context, xs: np.ndarray, weights: np.ndarray, cap: int):
    """Best (size, weighted pair count, capped witness list) over the given x."""
    ny, w = ctx.ybits.shape
    block = max(1, BLOCK_BYTES // max(1, ny * w * 8))
    best, count, wit = -1, 0, []
    for s in range(0, len(xs), block):
        bx = xs[s : s + block]
        bw = weights[s : s + block]
        counts = np.bitwise_count(ctx.xbits[bx][:, None, :] & ctx.ybits[None, :, :]).sum(axis=2, dtype=np.int64)
        top = counts.max()
        if top < best:
            continue
        for v in np.unique(counts[counts >= max(best, 0)])[::-1]:
            bi, yj = np.nonzero(counts == v)
            ok = _valid(ctx, bx[bi], yj)
            if not ok.any():
                continue
            bi, yj = bi[ok], yj[ok]
            v = int(v)
            if v > best:
                best, count, wit = v, 0, []
            count += int(bw[bi].sum())
            room = cap - len(wit)
            if room > 0:
                wit.extend(zip(bx[bi[:room]].tolist(), yj[:room].tolist()))
            break
    return best, count, wit


def _scan_worker(args):
    xs, weights, cap = args
    return _scan(_CTX, xs, weights, cap)


def max_intersection(spec: SearchSpec, budget: int | None = None, workers: int = 1) -> SearchReport:
    """Exact max of |D_{t+k}(x) & D_t(y)| over x in Z_q^(n+k), y in Z_q^n with d_L(x, y) >= d."""
    global _CTX
    start = time.perf_counter()
    q, n, t, k = spec.q, spec.n, spec.t, spec.k
    if n - t < 0:
        return SearchReport(spec, 0, 0, [], 0, 0, (time.perf_counter() - start) * 1e3)
    budget = default_budget() if budget is None else budget
    work, memory = estimate_work(spec)
    if work > budget:
        raise BudgetError(f"search would take about {work:.3g} word operations (budget {budget:.3g})", work, budget)
    if memory > MEMORY_BUDGET:
        raise BudgetError(f"search would hold about {memory} bytes of bitsets", memory, MEMORY_BUDGET)

    ctx = _build_context(spec)
    if spec.reduce:
        xs, weights = canonical_classes(q, n + k, with_reversal=(k == 0))
    else:
        xs = np.arange(q ** (n + k), dtype=np.int64)
        weights = np.ones(len(xs), dtype=np.int64)

    cap = spec.witness_cap
    if workers <= 1 or len(xs) < 2 * workers:
        parts = [_scan(ctx, xs, weights, cap)]
    else:
        chunks = np.array_split(np.arange(len(xs)), workers)
        _CTX = ctx
        try:
            import multiprocessing as mp

            with ProcessPoolExecutor(workers, mp_context=mp.get_context("fork")) as pool:
                parts = list(pool.map(_scan_worker, [(xs[c], weights[c], cap) for c in chunks]))
        finally:
            _CTX = None

    best = max(p[0] for p in parts)
    if best < 0:
        maximum, count, pairs = 0, 0, []
    else:
        maximum = best
        count = sum(p[1] for p in parts if p[0] == best)
        pairs = sorted(pair for p in parts if p[0] == best for pair in p[2])[:cap]
    witnesses = [(Word.from_index(q, n + k, x), Word.from_index(q, n, y), maximum) for x, y in pairs]
    return SearchReport(
        spec,
        maximum,
        count,
        witnesses,
        pairs_examined=int(len(xs)) * q**n,
        classes_examined=int(len(xs)),
        elapsed_ms=(time.perf_counter() - start) * 1e3,
    )


def csv_header() -> list[str]:
    return ["q", "n", "k", "t", "d", "maximum", "witness_count", "pairs_examined", "elapsed_ms"]


def csv_row(report: SearchReport) -> list:
    s = report.spec
    return [s.q, s.n, s.k, s.t, s.d, report.maximum, report.witness_count, report.pairs_examined,
            round(report.elapsed_ms, 3)]
