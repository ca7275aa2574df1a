"""Command line front end.

Subcommands: ``gen`` (write instance files), ``run`` (run algorithms on
instances), ``convergence`` / ``scaling`` (the two experiment CSVs),
``verify`` (self-check suite), ``pareto`` (dump the analytic front).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, oracles
from .algorithms import (
    ALGORITHM_IDS,
    ALGORITHMS,
    EvalCounting,
    InitMode,
    RunConfig,
    run_algorithm,
)
from .core import Instance
from .experiments import (
    DESK_SIZES,
    ExperimentSpec,
    convergence_experiment,
    instance_batch,
    run_seed,
    scaling_experiment,
    verify_suite,
    write_csv,
)


def _parse_algorithms(text: str) -> tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [a for a in names if a not in ALGORITHM_IDS]
    if unknown or not names:
        raise ValueError(
            f"unknown algorithms {unknown}; choose from {', '.join(ALGORITHMS)}"
        )
    return names


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValueError(f"sizes must be a comma-separated integer list, got {text!r}")
    return sizes


def _load_instance_dir(path: str) -> list[Instance]:
    names = sorted(f for f in os.listdir(path) if f.endswith(".json"))
    if not names:
        raise ValueError(f"no .json instance files in {path!r}")
    return [Instance.load(os.path.join(path, f)) for f in names]


def _resolve_instances(args, *, allow_generate: bool = True) -> list[Instance]:
    """An --instances value is either a count (generate) or a path (load)."""
    spec = args.instances
    if spec is not None and not spec.isdigit():
        if os.path.isdir(spec):
            return _load_instance_dir(spec)
        if os.path.isfile(spec):
            return [Instance.load(spec)]
        raise ValueError(f"--instances path {spec!r} does not exist")
    if not allow_generate:
        raise ValueError("--instances must name an instance file or directory")
    count = int(spec) if spec is not None else 1
    if count < 1:
        raise ValueError("--instances count must be >= 1")
    return instance_batch(args.n, args.seed, count, uniform=args.uniform)


def _add_common_gen_flags(p, *, n_default=300):
    p.add_argument("--n", type=int, default=n_default, help="items per instance")
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument(
        "--uniform", action="store_true", help="unit weights instead of correlated"
    )


def _cmd_gen(args) -> int:
    count = int(args.instances) if args.instances else 1
    if count < 1:
        raise ValueError("--instances count must be >= 1")
    instances = instance_batch(args.n, args.seed, count, uniform=args.uniform)
    if args.out.endswith(".json"):
        if count != 1:
            raise ValueError("a .json --out path can only hold one instance")
        instances[0].save(args.out)
        print(f"wrote {args.out}")
        return 0
    os.makedirs(args.out, exist_ok=True)
    for idx, inst in enumerate(instances):
        name = f"instance_{args.n}_{args.seed}_{idx}.json"
        inst.save(os.path.join(args.out, name))
    print(f"wrote {count} instances to {args.out}")
    return 0


def _cmd_run(args) -> int:
    instances = _resolve_instances(args)
    algorithms = _parse_algorithms(args.algorithms)
    records = []
    for idx, inst in enumerate(instances):
        for algorithm in algorithms:
            cfg = RunConfig(
                max_evaluations=args.budget,
                seed=run_seed(args.seed, inst.n, idx, algorithm, 0),
                init_mode=InitMode(args.init),
                eval_counting=EvalCounting(args.counting),
            )
            result = run_algorithm(algorithm, inst, cfg)
            best = result.best_solution
            records.append(
                {
                    "instance": idx,
                    "n": inst.n,
                    "algorithm": algorithm,
                    "benefit": result.best_fitness.benefit,
                    "violation": result.best_fitness.violation,
                    "weight": best.weight,
                    "evaluations": result.evaluations,
                    "rawIterations": result.raw_iterations,
                    "bits": "".join(map(str, best.bits.tolist())),
                }
            )
            print(
                f"instance {idx} n={inst.n} {algorithm}: "
                f"benefit {result.best_fitness.benefit!r} "
                f"weight {best.weight} evals {result.evaluations}"
            )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(records, fh, indent=2)
        print(f"wrote {args.out}")
    return 0


def _cmd_convergence(args) -> int:
    instances = _resolve_instances(args)
    spec = ExperimentSpec(
        algorithms=_parse_algorithms(args.algorithms),
        n=args.n,
        repetitions=len(instances),
        budget=args.budget,
        base_seed=args.seed,
        workers=args.workers,
        uniform=args.uniform,
    )
    header, rows = convergence_experiment(instances, spec)
    write_csv(args.out, header, rows)
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def _cmd_scaling(args) -> int:
    reps = int(args.instances) if args.instances else 30
    if reps < 1:
        raise ValueError("--instances count must be >= 1")
    spec = ExperimentSpec(
        algorithms=_parse_algorithms(args.algorithms),
        repetitions=reps,
        sizes=_parse_sizes(args.sizes),
        base_seed=args.seed,
        workers=args.workers,
    )
    header, rows = scaling_experiment(spec)
    write_csv(args.out, header, rows)
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def _cmd_verify(args) -> int:
    count = int(args.instances) if args.instances else 100
    report = verify_suite(count, args.seed)
    print(report.to_text())
    if args.out:
        payload = {
            "sampleCount": report.sample_count,
            "seed": report.seed,
            "ok": report.ok,
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "counterexample": r.counterexample,
                }
                for r in report.results
            ],
        }
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
        print(f"wrote {args.out}")
    return 0 if report.ok else 1


def _cmd_pareto(args) -> int:
    instances = _resolve_instances(args)
    if len(instances) != 1:
        raise ValueError("pareto works on a single instance")
    inst = instances[0]
    if not inst.correlated:
        raise ValueError("the analytic front needs a correlated instance")
    opt = oracles.optimal_prefix(inst)
    front = oracles.pareto_front(inst)
    rows = [
        [s.cardinality(), s.weight, core.benefit(inst, s)]
        for s in front
    ]
    if args.out:
        write_csv(args.out, ("cardinality", "weight", "benefit"), rows)
        print(f"wrote {args.out}")
    else:
        print("cardinality,weight,benefit")
        for card, w, b in rows:
            print(f"{card},{w},{b!r}")
    print(
        f"front size {len(front)} (k={opt.k}), optimum benefit {opt.benefit!r}"
        + (", tied with the next prefix" if opt.tie else "")
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwt",
        description="Packing-while-travelling benchmark tool: instances, "
        "search algorithms, oracles, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write instance JSON files")
    _add_common_gen_flags(p)
    p.add_argument("--instances", default=None, help="how many instances (default 1)")
    p.add_argument("--out", required=True, help=".json file or output directory")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("run", help="run algorithms on instances")
    _add_common_gen_flags(p)
    p.add_argument("--instances", default=None, help="count to generate, or a path")
    p.add_argument("--algorithms", default=",".join(ALGORITHMS))
    p.add_argument("--budget", type=int, default=100_000, help="evaluation budget")
    p.add_argument("--init", choices=["zero", "random"], default="random")
    p.add_argument("--counting", choices=["all", "effective"], default="all")
    p.add_argument("--out", default=None, help="optional JSON results path")
    p.set_defaults(fn=_cmd_run)

    p = sub.add_parser("convergence", help="normalized benefit over evaluations CSV")
    _add_common_gen_flags(p)
    p.add_argument("--instances", default="30", help="count to generate, or a path")
    p.add_argument("--algorithms", default=",".join(ALGORITHMS))
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(fn=_cmd_convergence)

    p = sub.add_parser("scaling", help="evaluations-to-optimum by size CSV")
    p.add_argument("--sizes", default=",".join(map(str, DESK_SIZES)))
    p.add_argument("--instances", default=None, help="instances per size (default 30)")
    p.add_argument("--algorithms", default=",".join(ALGORITHMS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(fn=_cmd_scaling)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--instances", default=None, help="sample count (default 100)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="optional JSON report path")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("pareto", help="dump the analytic Pareto front")
    _add_common_gen_flags(p, n_default=20)
    p.add_argument("--instances", default=None, help="instance file to load")
    p.add_argument("--out", default=None, help="optional CSV path")
    p.set_defaults(fn=_cmd_pareto)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
