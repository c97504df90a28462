"""Mutation-only genetic algorithm with best-half reinsertion.

Each generation draws ``population_size`` parents uniformly at random with
replacement, mutates each one (or runs select-best-mutation on it), merges
the offspring with the old population and keeps the cheapest
``population_size`` members. Old members win ties, so the best cost never
increases.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from operator import itemgetter
from typing import Callable, Optional, Sequence

from .distance import DistanceOracle, Tour, build_oracle, tour_cost
from .mutation import irgibnnm, random_inversion, random_slide, rgibnnm
from .rng import Rng
from .select_best import sbm
from .tsplib import Instance, Metric

__all__ = [
    "GaConfig",
    "Operator",
    "Population",
    "RunStats",
    "init_population",
    "random_permutation",
    "run",
    "step_generation",
]


class Operator(str, enum.Enum):
    SLIDE = "slide"
    INVERSION = "inversion"
    RGIBNNM = "rgibnnm"
    IRGIBNNM = "irgibnnm"
    SBM = "sbm"

    @classmethod
    def coerce(cls, value: "Operator | str") -> "Operator":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown operator {value!r}; expected one of {names}") from None


_SINGLE_OPS: dict[Operator, Callable[[Tour, object, DistanceOracle], Tour]] = {
    Operator.SLIDE: lambda t, rng, oracle: random_slide(t, rng),
    Operator.INVERSION: lambda t, rng, oracle: random_inversion(t, rng),
    Operator.RGIBNNM: rgibnnm,
    Operator.IRGIBNNM: irgibnnm,
}


@dataclass(frozen=True)
class GaConfig:
    population_size: int = 100
    generations: int = 2000
    operator: Operator = Operator.SBM
    seed: int = 0
    metric: Metric = Metric.EUC2D_ROUNDED

    def __post_init__(self):
        object.__setattr__(self, "operator", Operator.coerce(self.operator))
        object.__setattr__(self, "metric", Metric.coerce(self.metric))
        if self.population_size < 2:
            raise ValueError(f"population_size must be >= 2, got {self.population_size}")
        if self.generations < 1:
            raise ValueError(f"generations must be >= 1, got {self.generations}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def with_seed(self, seed: int) -> "GaConfig":
        return replace(self, seed=seed)


@dataclass
class Population:
    """Members as ``(tour, cost)`` pairs plus the set of distinct member tours."""

    members: list[tuple[Tour, float]]
    tours: set[Tour] = field(default_factory=set)

    def __post_init__(self):
        if not self.tours:
            self.tours = {t for t, _ in self.members}

    def __len__(self):
        return len(self.members)

    @property
    def costs(self) -> list[float]:
        return [c for _, c in self.members]

    def best(self) -> tuple[Tour, float]:
        return min(self.members, key=itemgetter(1))

    def worst(self) -> tuple[Tour, float]:
        return max(self.members, key=itemgetter(1))


@dataclass
class RunStats:
    best_fitness: float
    worst_fitness: float
    final_population_best_tour: Tour
    convergence: list[tuple[int, float]]
    seed: int = 0
    operator: Optional[Operator] = None


def random_permutation(rng, n: int) -> Tour:
    """Fisher-Yates shuffle of ``1..n``."""
    perm = list(range(1, n + 1))
    for k in range(n - 1, 0, -1):
        r = rng.uniform_int(0, k)
        perm[k], perm[r] = perm[r], perm[k]
    return tuple(perm)


def init_population(rng, n: int, size: int, oracle: DistanceOracle) -> Population:
    if n < 3:
        raise ValueError(f"need at least 3 cities, got {n}")
    members = []
    for _ in range(size):
        t = random_permutation(rng, n)
        members.append((t, tour_cost(t, oracle)))
    return Population(members)


def step_generation(
    pop: Population, config: GaConfig, oracle: DistanceOracle, rng
) -> Population:
    old = pop.members
    size = config.population_size
    last = len(old) - 1
    offspring: list[tuple[Tour, float]] = []
    if config.operator is Operator.SBM:
        # offspring accepted earlier in this generation count as present too
        present = set(pop.tours)
        for _ in range(size):
            parent = old[rng.uniform_int(0, last)][0]
            cand = sbm(parent, rng, oracle, present)
            if cand is not None:
                offspring.append((cand.tour, cand.cost))
                present.add(cand.tour)
    else:
        op = _SINGLE_OPS[config.operator]
        for _ in range(size):
            child = op(old[rng.uniform_int(0, last)][0], rng, oracle)
            offspring.append((child, tour_cost(child, oracle)))
    merged = old + offspring
    merged.sort(key=itemgetter(1))  # stable: old members first on ties
    return Population(merged[:size])


def run(
    config: GaConfig,
    instance: Instance,
    oracle: Optional[DistanceOracle] = None,
    initial: Optional[Sequence[Tour]] = None,
) -> RunStats:
    """One seeded GA run; ``convergence`` has ``generations + 1`` entries.

    ``initial`` replaces the random initial population (its length must
    equal ``population_size``).
    """
    if oracle is None:
        oracle = build_oracle(replace(instance, metric=config.metric))
    elif oracle.n != instance.dimension:
        raise ValueError("oracle does not match the instance dimension")
    rng = Rng(config.seed)
    if initial is None:
        pop = init_population(rng, instance.dimension, config.population_size, oracle)
    else:
        if len(initial) != config.population_size:
            raise ValueError("initial population has the wrong size")
        pop = Population([(tuple(t), tour_cost(t, oracle)) for t in initial])
    convergence = [(0, pop.best()[1])]
    for gen in range(1, config.generations + 1):
        pop = step_generation(pop, config, oracle, rng)
        # merged list is sorted, so the head is the best member
        convergence.append((gen, pop.members[0][1]))
    best_tour, best_cost = pop.best()
    return RunStats(
        best_fitness=best_cost,
        worst_fitness=pop.worst()[1],
        final_population_best_tour=best_tour,
        convergence=convergence,
        seed=config.seed,
        operator=config.operator,
    )
