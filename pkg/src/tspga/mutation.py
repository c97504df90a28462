"""Permutation mutation operators for TSP tours.

Positions are 1-based throughout. A segment drawn as ``(i, j)`` with
``i < j`` covers positions ``i + 1 .. j``; with ``i = 3, j = 8`` on a
10-city tour that is the sub-tour at positions 4..8.

Each randomized operator has a deterministic core taking explicit positions
(:func:`slide`, :func:`inversion`, :func:`exchange`) and draws everything else
from an ``rng`` exposing ``uniform_int(lo, hi)``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .distance import DistanceOracle, Tour

__all__ = [
    "NEIGHBOURHOOD_RADIUS",
    "MAX_OFFSET_REDRAWS",
    "SegmentBounds",
    "draw_segment",
    "exchange",
    "inversion",
    "irgibnnm",
    "random_inversion",
    "random_slide",
    "rgibnnm",
    "rgibnnm_move",
    "slide",
]

NEIGHBOURHOOD_RADIUS = 5
MAX_OFFSET_REDRAWS = 32


class SegmentBounds(NamedTuple):
    i: int
    j: int


def draw_segment(rng, n: int) -> SegmentBounds:
    """Two distinct uniform positions in ``1..n``, ordered.

    The second draw is repeated until it differs from the first.
    """
    if n < 3:
        raise ValueError(f"need at least 3 positions, got {n}")
    a = rng.uniform_int(1, n)
    b = rng.uniform_int(1, n)
    while b == a:
        b = rng.uniform_int(1, n)
    return SegmentBounds(a, b) if a < b else SegmentBounds(b, a)


def _check_bounds(tour: Sequence[int], bounds) -> tuple[int, int]:
    i, j = bounds
    if not 1 <= i < j <= len(tour):
        raise ValueError(f"invalid segment bounds ({i}, {j}) for a tour of length {len(tour)}")
    return i, j


def slide(tour: Sequence[int], bounds: SegmentBounds | tuple[int, int]) -> Tour:
    """Rotate positions ``i+1..j`` left by one.

    The gene at ``i + 1`` ends up at ``j``; everything outside the segment
    stays put.
    """
    i, j = _check_bounds(tour, bounds)
    t = tuple(tour)
    return t[:i] + t[i + 1 : j] + (t[i],) + t[j:]


def inversion(tour: Sequence[int], bounds: SegmentBounds | tuple[int, int]) -> Tour:
    """Reverse positions ``i+1..j``."""
    i, j = _check_bounds(tour, bounds)
    t = tuple(tour)
    return t[:i] + t[i:j][::-1] + t[j:]


def exchange(tour: Sequence[int], p: int, q: int) -> Tour:
    """Swap the genes at positions ``p`` and ``q``."""
    n = len(tour)
    if p == q or not (1 <= p <= n and 1 <= q <= n):
        raise ValueError(f"exchange needs two distinct positions in 1..{n}, got {p}, {q}")
    out = list(tour)
    out[p - 1], out[q - 1] = out[q - 1], out[p - 1]
    return tuple(out)


def random_slide(tour: Sequence[int], rng) -> Tour:
    return slide(tour, draw_segment(rng, len(tour)))


def random_inversion(tour: Sequence[int], rng) -> Tour:
    return inversion(tour, draw_segment(rng, len(tour)))


def _draw_offset(rng) -> int:
    # uniform over -5..-1, 1..5
    k = rng.uniform_int(0, 2 * NEIGHBOURHOOD_RADIUS - 1)
    return k - NEIGHBOURHOOD_RADIUS if k < NEIGHBOURHOOD_RADIUS else k - NEIGHBOURHOOD_RADIUS + 1


def rgibnnm_move(tour: Sequence[int], rng, oracle: DistanceOracle) -> tuple[int, int, int]:
    """Draw the RGIBNNM swap without applying it.

    Returns ``(p, q, t)``: the random position ``p``, the position ``q`` of
    the nearest city of ``tour[p]``, and the target position ``t`` within a
    circular window of 5 around ``q`` (``t != p``).
    """
    n = len(tour)
    p = rng.uniform_int(1, n)
    q = tour.index(oracle.nearest_city(tour[p - 1])) + 1
    for _ in range(MAX_OFFSET_REDRAWS):
        t = (q - 1 + _draw_offset(rng)) % n + 1
        if t != p:
            return p, q, t
    # q != p always, since a city is never its own nearest neighbour
    return p, q, q


def rgibnnm(tour: Sequence[int], rng, oracle: DistanceOracle) -> Tour:
    """Swap a random city with a city near its nearest neighbour in the tour."""
    p, _, t = rgibnnm_move(tour, rng, oracle)
    return exchange(tour, p, t)


def irgibnnm(tour: Sequence[int], rng, oracle: DistanceOracle) -> Tour:
    """Inversion followed by RGIBNNM on the inverted tour.

    Draw order: segment ``i``, segment ``j``, position ``p``, offset(s).
    """
    return rgibnnm(random_inversion(tour, rng), rng, oracle)
