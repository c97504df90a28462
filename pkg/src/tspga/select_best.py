"""Select-best-mutation: keep the cheapest new offspring of three operators."""

from __future__ import annotations

import enum
from typing import Callable, Container, NamedTuple, Optional, Sequence

from .distance import DistanceOracle, Tour, tour_cost
from .mutation import irgibnnm, random_inversion, random_slide

__all__ = ["Candidate", "Origin", "sbm", "sbm_candidates", "tours_equal"]


class Origin(enum.IntEnum):
    # value doubles as the tie-break priority
    SLIDE = 0
    INVERSION = 1
    IRGIBNNM = 2


class Candidate(NamedTuple):
    tour: Tour
    cost: float
    origin: Origin


def tours_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """Exact sequence equality; rotations and reflections count as different."""
    return tuple(a) == tuple(b)


_GENERATORS: tuple[tuple[Origin, Callable], ...] = (
    (Origin.SLIDE, lambda t, rng, oracle: random_slide(t, rng)),
    (Origin.INVERSION, lambda t, rng, oracle: random_inversion(t, rng)),
    (Origin.IRGIBNNM, irgibnnm),
)


def sbm_candidates(parent: Sequence[int], rng, oracle: DistanceOracle) -> list[Candidate]:
    """All three offspring of ``parent``, cheapest first (ties by origin)."""
    parent = tuple(parent)
    cands = []
    for origin, op in _GENERATORS:
        child = op(parent, rng, oracle)
        cands.append(Candidate(child, tour_cost(child, oracle), origin))
    cands.sort(key=lambda c: (c.cost, c.origin))
    return cands


def sbm(
    parent: Sequence[int],
    rng,
    oracle: DistanceOracle,
    population: Container[Tour],
) -> Optional[Candidate]:
    """Best offspring of ``parent`` that is not already in ``population``.

    Slide, inversion and IRGIBNNM are always all applied, in that order, so
    the random stream does not depend on population contents. Returns
    ``None`` when all three offspring are duplicates.

    ``population`` only needs ``in``; pass a set of tuples for O(1) lookups.
    """
    for cand in sbm_candidates(parent, rng, oracle):
        if cand.tour not in population:
            return cand
    return None
