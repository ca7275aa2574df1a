"""Five baseline search heuristics over a shared run harness.

Single-objective, elitist (accept on fitness >=):

* ``rls_swap``: flips one uniformly random bit, or, when both bit values
  are present and a fair coin allows, swaps a random one-bit with a random
  zero-bit (preserving cardinality).
* ``opo_ea``: the (1+1) EA; every bit flips independently with rate 1/n.

Archive-based (a weight/fitness Pareto archive replaces the single parent;
the parent is the benefit-maximal member of a uniformly chosen non-empty
cardinality class):

* ``gsemo``: standard 1/n bit mutation.
* ``semo``: exactly one uniformly random bit.
* ``semo_swap``: the rls_swap mutation rule.

All runs are deterministic in (instance, config): the RNG is a counter-based
generator seeded from the config, and results are bit-identical across the
pure-Python and compiled engines and across process counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import engine
from .core import Fitness, Instance, Solution
from .oracles import optimal_prefix, thresholds

ALGORITHM_IDS = {
    "rls_swap": 1,
    "opo_ea": 2,
    "gsemo": 3,
    "semo": 4,
    "semo_swap": 5,
}

ALGORITHMS = tuple(ALGORITHM_IDS)

_ARCHIVE_ALGORITHMS = frozenset({"gsemo", "semo", "semo_swap"})


class InitMode(enum.Enum):
    ZERO = "zero"
    UNIFORM_RANDOM = "random"


class EvalCounting(enum.Enum):
    ALL = "all"
    EFFECTIVE = "effective"


@dataclass(frozen=True)
class RunConfig:
    """Stopping, seeding, and bookkeeping knobs shared by all algorithms.

    ``target_benefit`` stops a run once the best feasible benefit reaches
    the target within the core tolerance band.  With ``EvalCounting.ALL``
    every iteration costs one evaluation; with ``EFFECTIVE`` an iteration
    whose mutation flips no bits is free (the offspring equals the parent).
    ``trace_stride`` records a trace point every so many iterations on top
    of the always-recorded improvements.
    """

    max_evaluations: int
    target_benefit: float | None = None
    seed: int = 0
    init_mode: InitMode = InitMode.UNIFORM_RANDOM
    eval_counting: EvalCounting = EvalCounting.ALL
    trace_stride: int = 1_000_000

    def __post_init__(self):
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")
        if self.trace_stride < 1:
            raise ValueError("trace_stride must be >= 1")


@dataclass(frozen=True)
class TracePoint:
    evaluations: int
    benefit: float
    weight: int
    archive_size: int


@dataclass(frozen=True)
class RunResult:
    """Outcome of one run.

    ``best_solution`` is the fitness-maximal solution seen: the current
    solution for the elitist single-objective algorithms, the archive's
    fitness-maximal member otherwise (the best feasible one whenever any
    feasible member exists).  ``evaluations`` respects the configured
    counting mode; ``raw_iterations`` counts every loop iteration.
    ``h_violations`` counts decreases of the protected-prefix length along
    feasible accepted steps and stays 0 unless tracking was requested.
    ``archive`` is the final archive for the archive-based algorithms,
    sorted by weight, and None otherwise.
    """

    best_solution: Solution
    best_fitness: Fitness
    evaluations: int
    raw_iterations: int
    hit_target: bool
    trace: list[TracePoint] = field(repr=False)
    h_violations: int = 0
    archive: list[Solution] | None = field(default=None, repr=False)


def _execute(inst: Instance, algorithm: str, cfg: RunConfig, track_h: bool) -> RunResult:
    if track_h:
        if algorithm != "rls_swap":
            raise ValueError("protected-prefix tracking applies to rls_swap runs")
        po = optimal_prefix(inst)
        h_cap = po.k
        remove = thresholds(inst)[1]
    else:
        h_cap = 0
        remove = np.zeros(0, dtype=np.float64)
    raw = engine.run(
        inst.weights,
        inst.profits,
        inst.cities,
        inst.distances,
        inst.renting_rate,
        inst.v_min,
        inst.v_max,
        inst.nu,
        inst.capacity,
        ALGORITHM_IDS[algorithm],
        cfg.seed,
        cfg.max_evaluations,
        cfg.target_benefit is not None,
        cfg.target_benefit if cfg.target_benefit is not None else 0.0,
        cfg.init_mode is InitMode.ZERO,
        cfg.eval_counting is EvalCounting.EFFECTIVE,
        cfg.trace_stride,
        track_h,
        h_cap,
        remove,
    )
    best = Solution(
        np.asarray(raw["bits"], dtype=np.uint8), raw["weight"], raw["profit"]
    )
    archive = None
    if raw["archive"] is not None:
        archive = [
            Solution(np.asarray(b, dtype=np.uint8), w, p)
            for b, w, p, _q, _b in raw["archive"]
        ]
    return RunResult(
        best_solution=best,
        best_fitness=Fitness(raw["violation"], raw["benefit"]),
        evaluations=raw["evaluations"],
        raw_iterations=raw["raw_iterations"],
        hit_target=raw["hit_target"],
        trace=[TracePoint(*point) for point in raw["trace"]],
        h_violations=raw["h_violations"],
        archive=archive,
    )


def run_rls_swap(inst: Instance, cfg: RunConfig, *, track_h: bool = False) -> RunResult:
    return _execute(inst, "rls_swap", cfg, track_h)


def run_one_plus_one_ea(inst: Instance, cfg: RunConfig) -> RunResult:
    return _execute(inst, "opo_ea", cfg, False)


def run_gsemo(inst: Instance, cfg: RunConfig) -> RunResult:
    return _execute(inst, "gsemo", cfg, False)


def run_semo(inst: Instance, cfg: RunConfig) -> RunResult:
    return _execute(inst, "semo", cfg, False)


def run_semo_swap(inst: Instance, cfg: RunConfig) -> RunResult:
    return _execute(inst, "semo_swap", cfg, False)


def run_algorithm(
    name: str, inst: Instance, cfg: RunConfig, *, track_h: bool = False
) -> RunResult:
    """Dispatch by algorithm name (see ALGORITHMS)."""
    if name not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")
    if track_h and name != "rls_swap":
        raise ValueError("protected-prefix tracking applies to rls_swap runs")
    return _execute(inst, name, cfg, track_h)
