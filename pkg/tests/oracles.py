"""Brute-force references that share no code with the package."""

from functools import lru_cache
from itertools import combinations, product


def ball(s, t):
    s = tuple(s)
    if t < 0 or t > len(s):
        return frozenset()
    return frozenset(tuple(s[i] for i in keep) for keep in combinations(range(len(s)), len(s) - t))


def lcs(a, b):
    a, b = tuple(a), tuple(b)
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def dist(x, y):
    """Deletions from the longer word needed to reach a common subsequence of y."""
    return len(y) - lcs(x, y)


@lru_cache(maxsize=None)
def max_intersection(q, n, t, k=0, d=2):
    xs = list(product(range(q), repeat=n + k))
    ys = list(product(range(q), repeat=n))
    bx = {x: ball(x, t + k) for x in xs}
    by = {y: ball(y, t) for y in ys}
    best = 0
    for x in xs:
        for y in ys:
            size = len(bx[x] & by[y])
            if size > best and dist(x, y) >= d:
                best = size
    return best


def greedy_code(q, n, d):
    kept = []
    for w in product(range(q), repeat=n):
        if all(dist(w, c) >= d for c in kept):
            kept.append(w)
    return kept
