"""Seedable random stream shared by the operators and the engine."""

from __future__ import annotations

import random

__all__ = ["RNG_ALGORITHM", "Rng"]

RNG_ALGORITHM = "MT19937 (Python random.Random, integer seed)"


class Rng:
    """Deterministic integer stream.

    Everything random in a GA run goes through :meth:`uniform_int`, so any
    object with that method (for example a scripted stub in tests) can stand
    in for it.
    """

    algorithm = RNG_ALGORITHM

    def __init__(self, seed: int = 0):
        if seed < 0 or seed >= 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = seed
        self._random = random.Random(seed)

    def uniform_int(self, lo: int, hi: int) -> int:
        """Integer drawn uniformly from ``[lo, hi]`` inclusive."""
        return self._random.randrange(lo, hi + 1)

    def getstate(self):
        return self._random.getstate()

    def setstate(self, state) -> None:
        self._random.setstate(state)

    def __repr__(self):
        return f"Rng(seed={self.seed})"
