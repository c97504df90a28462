"""Command-line entry point: ``tspga {bench,solve,validate}``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .bench import ExperimentSpec, InstanceLoadError, OutputUnwritable, run_experiment
from .engine import GaConfig, Operator, run
from .tsplib import BUNDLED_INSTANCES, TsplibError, bundled_path, load_instance

log = logging.getLogger("tspga")


def _resolve(path_or_name: str) -> Path:
    """A file path, or the name of a bundled instance such as ``eil51``."""
    p = Path(path_or_name)
    if p.exists():
        return p
    try:
        return bundled_path(path_or_name)
    except KeyError:
        return p  # let the caller report the missing file


def _optimal_pairs(values: list[str]) -> dict[str, float]:
    out = {}
    for item in values:
        name, sep, val = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {item!r}")
        out[name] = float(val)
    return out


def _add_ga_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pop", type=int, default=100, help="population size (default 100)")
    p.add_argument("--generations", type=int, default=2000, help="generations (default 2000)")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--metric", choices=["rounded", "real"], default="rounded")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tspga", description="Mutation-only GA for the symmetric TSP."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    ops = [o.value for o in Operator]
    b = sub.add_parser("bench", help="run repeated experiments and write CSV results")
    b.add_argument("--instances", nargs="+", required=True,
                   help=f"TSPLIB files or bundled names ({', '.join(BUNDLED_INSTANCES)})")
    b.add_argument("--operators", nargs="+", default=ops, choices=ops, metavar="OP",
                   help=f"operators to compare (default: all of {', '.join(ops)})")
    b.add_argument("--repeats", type=int, default=10)
    _add_ga_args(b)
    b.add_argument("--out", required=True, help="output directory")
    b.add_argument("--optimal", nargs="*", default=[], metavar="NAME=VALUE",
                   help="override known optimum per instance name")
    b.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("solve", help="single GA run; print the best tour")
    s.add_argument("instance")
    s.add_argument("--operator", default="sbm", choices=ops)
    _add_ga_args(s)
    s.add_argument("--convergence", help="write generation,best_cost CSV here")

    v = sub.add_parser("validate", help="parse-check TSPLIB files")
    v.add_argument("instances", nargs="+")
    return parser


def _cmd_bench(args) -> int:
    spec = ExperimentSpec(
        instance_paths=[_resolve(i) for i in args.instances],
        operators=args.operators,
        output_dir=args.out,
        repeats=args.repeats,
        base=GaConfig(args.pop, args.generations, Operator.SBM, args.seed, args.metric),
        optimal_overrides=_optimal_pairs(args.optimal),
        workers=args.workers,
    )
    for s in run_experiment(spec):
        err = "" if s.error_rate_pct is None else f"  err={s.error_rate_pct:.2f}%"
        print(f"{s.instance:>10} {s.operator:>9}  best={s.best:g} worst={s.worst:g} "
              f"avg={s.average:g}{err}")
    print(f"results written to {spec.output_dir}")
    return 0


def _cmd_solve(args) -> int:
    inst = load_instance(_resolve(args.instance), args.metric)
    cfg = GaConfig(args.pop, args.generations, args.operator, args.seed, args.metric)
    stats = run(cfg, inst)
    print(f"instance: {inst.name} ({inst.dimension} cities)")
    print(f"best_cost: {stats.best_fitness:g}")
    if inst.known_optimal:
        print(f"optimal: {inst.known_optimal:g}")
    print("tour: " + " ".join(map(str, stats.final_population_best_tour)))
    if args.convergence:
        with open(args.convergence, "w", encoding="utf-8") as fh:
            fh.write("generation,best_cost\n")
            fh.writelines(f"{g},{c:g}\n" for g, c in stats.convergence)
    return 0


def _cmd_validate(args) -> int:
    status = 0
    for item in args.instances:
        try:
            inst = load_instance(_resolve(item))
        except (OSError, TsplibError) as exc:
            print(f"{item}: {type(exc).__name__}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(f"{item}: ok  name={inst.name} dimension={inst.dimension}")
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handlers = {"bench": _cmd_bench, "solve": _cmd_solve, "validate": _cmd_validate}
    try:
        return handlers[args.command](args)
    except (InstanceLoadError, OutputUnwritable, TsplibError, OSError, ValueError,
            argparse.ArgumentTypeError) as exc:
        print(f"tspga {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
