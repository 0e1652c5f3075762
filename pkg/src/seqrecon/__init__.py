"""Exact combinatorics for sequence reconstruction over q-ary deletion channels."""

from seqrecon.words import (
    Ordering,
    RunDecomposition,
    Word,
    WordError,
    identity_ordering,
    parse_word,
    periodic_word,
    relabel,
    reverse,
    runs,
)
from seqrecon.balls import (
    BudgetError,
    WordSet,
    ball_size,
    deletion_distance,
    enumerate_ball,
    intersect_balls,
    intersection_size,
)

__all__ = [
    "BudgetError",
    "Ordering",
    "RunDecomposition",
    "Word",
    "WordError",
    "WordSet",
    "ball_size",
    "deletion_distance",
    "enumerate_ball",
    "identity_ordering",
    "intersect_balls",
    "intersection_size",
    "parse_word",
    "periodic_word",
    "relabel",
    "reverse",
    "runs",
]
