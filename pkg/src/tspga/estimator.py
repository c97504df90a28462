"""scikit-learn style wrapper around :func:`tspga.engine.run`."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_random_state

from .distance import build_oracle, tour_cost
from .engine import GaConfig, Operator, run
from .tsplib import Instance, Metric


class MutationGA(TransformerMixin, BaseEstimator):
    """Solve a symmetric TSP given as an ``(n_cities, 2)`` coordinate array.

    Parameters
    ----------
    operator : {"sbm", "irgibnnm", "inversion", "slide", "rgibnnm"}, default="sbm"
        Mutation applied to every selected parent; ``"sbm"`` applies slide,
        inversion and IRGIBNNM and keeps the best new offspring.
    population_size : int, default=100
    generations : int, default=2000
    metric : {"rounded", "real"}, default="rounded"
        Edge lengths rounded to the nearest integer (TSPLIB) or exact.
    random_state : int, RandomState instance or None, default=0
        Seed of the run. ``None`` or a RandomState draws a fresh seed.

    Attributes
    ----------
    tour_ : ndarray of shape (n_cities,)
        Best tour found, as 1-based city ids (row ``k`` of ``X`` is city ``k + 1``).
    cost_ : float
        Length of ``tour_``.
    worst_cost_ : float
        Worst member of the final population.
    convergence_ : ndarray of shape (generations + 1,)
        Best population cost after initialization and after each generation.
    run_stats_ : RunStats
    seed_ : int

    Examples
    --------
    >>> import numpy as np
    >>> X = np.array([[0, 0], [0, 1], [1, 1], [1, 0]])
    >>> ga = MutationGA(population_size=10, generations=20, metric="real").fit(X)
    >>> ga.cost_
    4.0
    """

    def __init__(
        self,
        operator="sbm",
        population_size=100,
        generations=2000,
        metric="rounded",
        random_state=0,
    ):
        self.operator = operator
        self.population_size = population_size
        self.generations = generations
        self.metric = metric
        self.random_state = random_state

    def _config(self, seed: int) -> GaConfig:
        return GaConfig(
            population_size=self.population_size,
            generations=self.generations,
            operator=Operator.coerce(self.operator),
            seed=seed,
            metric=Metric.coerce(self.metric),
        )

    def _seed(self) -> int:
        if isinstance(self.random_state, (int, np.integer)):
            return int(self.random_state)
        return int(check_random_state(self.random_state).randint(2**31 - 1))

    def _as_instance(self, X) -> Instance:
        if isinstance(X, Instance):
            return X
        X = check_array(X, dtype=float, ensure_min_samples=3)
        if X.shape[1] != 2:
            raise ValueError(f"expected coordinates of shape (n_cities, 2), got {X.shape}")
        return Instance.from_coords(X, metric=self.metric)

    def fit(self, X, y=None):
        """Run the GA on the cities in ``X`` (an array or an :class:`Instance`)."""
        instance = self._as_instance(X)
        self.seed_ = self._seed()
        config = self._config(self.seed_)
        stats = run(config, instance)
        self.run_stats_ = stats
        self.tour_ = np.asarray(stats.final_population_best_tour, dtype=int)
        self.cost_ = stats.best_fitness
        self.worst_cost_ = stats.worst_fitness
        self.convergence_ = np.array([c for _, c in stats.convergence])
        self.n_cities_ = instance.dimension
        self.n_features_in_ = 2
        return self

    def _check_X(self, X) -> np.ndarray:
        check_is_fitted(self, "tour_")
        coords = X.coords if isinstance(X, Instance) else check_array(X, dtype=float)
        if coords.shape != (self.n_cities_, 2):
            raise ValueError(
                f"X has shape {coords.shape}, but the tour was fitted on "
                f"{self.n_cities_} cities"
            )
        return coords

    def transform(self, X):
        """Rows of ``X`` in the order of the fitted tour."""
        return self._check_X(X)[self.tour_ - 1]

    def score(self, X, y=None):
        """Negative length of the fitted tour over the cities in ``X``."""
        coords = self._check_X(X)
        oracle = build_oracle(Instance.from_coords(coords, metric=self.metric))
        return -tour_cost(tuple(self.tour_.tolist()), oracle)
