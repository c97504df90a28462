"""Edge lengths, tour cost and the nearest-city table."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .tsplib import City, Instance, Metric

__all__ = [
    "DistanceOracle",
    "Tour",
    "build_oracle",
    "euclidean_distance",
    "is_valid_tour",
    "position_of",
    "tour_cost",
]

# A tour is a tuple of 1-based city ids; tuples hash cheaply for duplicate checks.
Tour = tuple[int, ...]


def nint(value: float) -> int:
    """Nearest integer with halves rounded away from zero (TSPLIB ``nint``)."""
    return int(math.floor(value + 0.5)) if value >= 0 else -int(math.floor(-value + 0.5))


def euclidean_distance(a: City, b: City, metric: Metric | str = Metric.EUC2D_REAL) -> float:
    dx, dy = a.x - b.x, a.y - b.y
    d = math.sqrt(dx * dx + dy * dy)
    if Metric.coerce(metric) is Metric.EUC2D_ROUNDED:
        return float(nint(d))
    return d


class DistanceOracle:
    """Precomputed symmetric distance matrix plus each city's nearest city.

    ``dist[a - 1, b - 1]`` is the length of edge ``(a, b)`` and
    ``nearest[c - 1]`` the id of the closest other city to ``c`` (ties go to
    the smaller id). Immutable once built.
    """

    __slots__ = ("n", "dist", "nearest", "metric", "_rows", "_near")

    def __init__(self, dist: np.ndarray, metric: Metric = Metric.EUC2D_REAL):
        dist = np.array(dist, dtype=float)
        n = dist.shape[0]
        if dist.shape != (n, n) or n < 3:
            raise ValueError(f"need a square matrix with at least 3 rows, got {dist.shape}")
        dist.setflags(write=False)
        masked = dist + np.diag(np.full(n, np.inf))
        nearest = np.argmin(masked, axis=1) + 1
        nearest.setflags(write=False)
        self.n = n
        self.dist = dist
        self.nearest = nearest
        self.metric = metric
        # Id-indexed copies (slot 0 unused) for the hot loops.
        pad = np.zeros((n + 1, n + 1))
        pad[1:, 1:] = dist
        self._rows = pad.tolist()
        self._near = [0] + nearest.tolist()

    def distance(self, a: int, b: int) -> float:
        return self._rows[a][b]

    def nearest_city(self, c: int) -> int:
        return self._near[c]

    def __repr__(self):
        return f"DistanceOracle(n={self.n}, metric={self.metric.name})"


def build_oracle(instance: Instance) -> DistanceOracle:
    xy = instance.coords
    diff = xy[:, None, :] - xy[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=-1))
    if instance.metric is Metric.EUC2D_ROUNDED:
        # floor(d + 0.5) is nint for the non-negative lengths here.
        dist = np.floor(dist + 0.5)
    return DistanceOracle(dist, instance.metric)


def tour_cost(tour: Sequence[int], oracle: DistanceOracle) -> float:
    """Length of the closed tour, including the edge back to the start."""
    rows = oracle._rows
    it = iter(tour)
    first = prev = next(it)
    total = 0.0
    for c in it:
        total += rows[prev][c]
        prev = c
    return total + rows[prev][first]


def position_of(tour: Sequence[int], city: int) -> int:
    """1-based position of ``city`` in ``tour``."""
    return tour.index(city) + 1


def is_valid_tour(tour: Sequence[int], n: int) -> bool:
    return len(tour) == n and set(tour) == set(range(1, n + 1))
