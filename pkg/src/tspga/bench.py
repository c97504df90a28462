"""Multi-seed experiments over (instance, operator) pairs, written as CSV.

Layout of ``output_dir`` after :func:`run_experiment`::

    summary.csv                      instance,operator,optimal,best,worst,average,error_rate_pct
    runs.csv                         instance,operator,seed,best_fitness,worst_in_final_pop
    convergence/<inst>_<op>_<seed>.csv   generation,best_cost
    manifest.json                    config, seeds, RNG algorithm, tool version
"""

from __future__ import annotations

import csv
import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .distance import build_oracle
from .engine import GaConfig, Operator, RunStats, run
from .rng import RNG_ALGORITHM
from .tsplib import Instance, Metric, TsplibError, load_instance

__all__ = [
    "CONVERGENCE_HEADER",
    "RUNS_HEADER",
    "SUMMARY_HEADER",
    "ExperimentSpec",
    "ExperimentSummary",
    "InstanceLoadError",
    "OutputUnwritable",
    "error_rate",
    "run_experiment",
    "summarize",
]

log = logging.getLogger(__name__)

SUMMARY_HEADER = ["instance", "operator", "optimal", "best", "worst", "average", "error_rate_pct"]
RUNS_HEADER = ["instance", "operator", "seed", "best_fitness", "worst_in_final_pop"]
CONVERGENCE_HEADER = ["generation", "best_cost"]


class InstanceLoadError(RuntimeError):
    pass


class OutputUnwritable(RuntimeError):
    pass


def error_rate(average: float, optimal: float) -> float:
    """Percentage by which ``average`` exceeds ``optimal``."""
    if not optimal > 0:
        raise ValueError(f"optimal must be positive, got {optimal}")
    return 100.0 * (average - optimal) / optimal


@dataclass
class ExperimentSpec:
    instance_paths: Sequence[str | Path]
    operators: Sequence[Operator | str]
    output_dir: str | Path
    repeats: int = 10
    base: GaConfig = field(default_factory=GaConfig)
    optimal_overrides: dict[str, float] = field(default_factory=dict)
    workers: int = 1

    def __post_init__(self):
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")
        if not self.instance_paths:
            raise ValueError("at least one instance is required")
        if not self.operators:
            raise ValueError("at least one operator is required")
        self.operators = [Operator.coerce(o) for o in self.operators]
        self.output_dir = Path(self.output_dir)
        self.instance_paths = [Path(p) for p in self.instance_paths]
        for p in self.instance_paths:
            if not p.is_file() or not os.access(p, os.R_OK):
                raise InstanceLoadError(f"cannot read instance file {p}")

    def load_instances(self) -> list[Instance]:
        out = []
        for p in self.instance_paths:
            try:
                inst = load_instance(p, self.base.metric)
            except (OSError, TsplibError) as exc:
                raise InstanceLoadError(f"{p}: {exc}") from exc
            if inst.name in self.optimal_overrides:
                inst = inst.with_optimal(self.optimal_overrides[inst.name])
            out.append(inst)
        return out

    @property
    def seeds(self) -> list[int]:
        return [self.base.seed + r for r in range(self.repeats)]


@dataclass(frozen=True)
class ExperimentSummary:
    instance: str
    operator: str
    optimal: Optional[float]
    best: float
    worst: float
    average: float
    error_rate_pct: Optional[float]


def summarize(
    instance: str, operator: str, bests: Sequence[float], optimal: Optional[float]
) -> ExperimentSummary:
    """Aggregate per-run best costs into one table row."""
    average = math.fsum(bests) / len(bests)
    err = error_rate(average, optimal) if optimal else None
    return ExperimentSummary(instance, operator, optimal, min(bests), max(bests), average, err)


def _run_one(args: tuple[Instance, GaConfig]) -> RunStats:
    instance, config = args
    return run(config, instance, oracle=build_oracle(instance))


def _fmt_cost(value: float, metric: Metric) -> str:
    if metric is Metric.EUC2D_ROUNDED and float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def _fmt_opt(value: Optional[float]) -> str:
    if value is None:
        return ""
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def _write_csv(path: Path, header: list[str], rows: Iterable[Sequence]) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def run_experiment(spec: ExperimentSpec) -> list[ExperimentSummary]:
    """Execute every (instance, operator, seed) run and write the CSV outputs."""
    instances = spec.load_instances()
    base = spec.base
    metric = base.metric
    out = spec.output_dir
    try:
        (out / "convergence").mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputUnwritable(f"cannot create output directory {out}: {exc}") from exc

    tasks = [
        (inst, GaConfig(base.population_size, base.generations, op, seed, metric))
        for inst in instances
        for op in spec.operators
        for seed in spec.seeds
    ]
    log.info("running %d GA runs with %d worker(s)", len(tasks), spec.workers)
    if spec.workers > 1:
        with ProcessPoolExecutor(spec.workers) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]

    summaries: list[ExperimentSummary] = []
    run_rows = []
    try:
        for (inst, cfg), stats in zip(tasks, results):
            op = cfg.operator.value
            run_rows.append(
                [inst.name, op, cfg.seed, _fmt_cost(stats.best_fitness, metric),
                 _fmt_cost(stats.worst_fitness, metric)]
            )
            _write_csv(
                out / "convergence" / f"{inst.name}_{op}_{cfg.seed}.csv",
                CONVERGENCE_HEADER,
                ([g, _fmt_cost(c, metric)] for g, c in stats.convergence),
            )
        k = 0
        for inst in instances:
            for op in spec.operators:
                chunk = results[k : k + spec.repeats]
                k += spec.repeats
                summaries.append(
                    summarize(inst.name, op.value, [s.best_fitness for s in chunk], inst.known_optimal)
                )
        _write_csv(out / "runs.csv", RUNS_HEADER, run_rows)
        _write_csv(
            out / "summary.csv",
            SUMMARY_HEADER,
            (
                [s.instance, s.operator, _fmt_opt(s.optimal), _fmt_cost(s.best, metric),
                 _fmt_cost(s.worst, metric), repr(s.average),
                 "" if s.error_rate_pct is None else repr(s.error_rate_pct)]
                for s in summaries
            ),
        )
        manifest = {
            "tool": "tspga",
            "version": _version(),
            "rng": RNG_ALGORITHM,
            "seed_rule": "seed_r = base_seed + r for r in 0..repeats-1",
            "config": {**asdict(base), "operator": None, "metric": metric.value},
            "operators": [o.value for o in spec.operators],
            "repeats": spec.repeats,
            "seeds": spec.seeds,
            "instances": [
                {"name": i.name, "path": str(p), "dimension": i.dimension, "optimal": i.known_optimal}
                for i, p in zip(instances, spec.instance_paths)
            ],
        }
        (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputUnwritable(f"cannot write results to {out}: {exc}") from exc
    return summaries


def _version() -> str:
    from . import __version__

    return __version__
