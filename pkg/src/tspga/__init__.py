"""Mutation-only genetic algorithm for the symmetric TSP.

The estimator front end (:class:`MutationGA`) imports scikit-learn lazily.
"""

from .distance import DistanceOracle, build_oracle, euclidean_distance, position_of, tour_cost
from .engine import GaConfig, Operator, RunStats, run
from .mutation import draw_segment, exchange, inversion, irgibnnm, rgibnnm, slide
from .rng import Rng
from .select_best import sbm
from .tsplib import Instance, Metric, load_bundled, load_instance, parse_instance

__version__ = "0.1.0"

__all__ = [
    "DistanceOracle",
    "GaConfig",
    "Instance",
    "Metric",
    "MutationGA",
    "Operator",
    "Rng",
    "RunStats",
    "build_oracle",
    "draw_segment",
    "euclidean_distance",
    "exchange",
    "inversion",
    "irgibnnm",
    "load_bundled",
    "load_instance",
    "parse_instance",
    "position_of",
    "rgibnnm",
    "run",
    "sbm",
    "slide",
    "tour_cost",
]


def __getattr__(name):
    if name == "MutationGA":
        from .estimator import MutationGA

        return MutationGA
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
