"""Reference computations that do not go through the package's code paths."""

import itertools
import math


def closed_length(coords, tour):
    """Tour length straight from coordinates (tour holds 1-based ids)."""
    pts = [coords[c - 1] for c in tour]
    return sum(math.dist(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts)))


def distinct_tours(n):
    """Every tour of 1..n up to rotation and reflection: (n-1)!/2 of them."""
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] < rest[-1]:
            yield (1,) + rest


def brute_force_optimum(coords):
    n = len(coords)
    return min(closed_length(coords, t) for t in distinct_tours(n))


def rotate_segment_left(seq, start, stop):
    """Left-rotate seq[start:stop] by one using a deque (0-based, half-open)."""
    from collections import deque

    d = deque(seq[start:stop])
    d.rotate(-1)
    return tuple(seq[:start]) + tuple(d) + tuple(seq[stop:])


class ScriptedRng:
    """Replays fixed draws; fails loudly on a draw outside the expected range."""

    def __init__(self, draws):
        self.draws = list(draws)
        self.calls = []

    def uniform_int(self, lo, hi):
        if not self.draws:
            raise AssertionError(f"unexpected extra draw in [{lo}, {hi}]")
        v = self.draws.pop(0)
        self.calls.append((lo, hi, v))
        assert lo <= v <= hi, f"scripted draw {v} outside [{lo}, {hi}]"
        return v
