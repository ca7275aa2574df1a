"""Packing While Travelling: evaluation, analytic oracles, and baseline EAs."""

from .algorithms import (
    ALGORITHM_IDS,
    ALGORITHMS,
    EvalCounting,
    InitMode,
    RunConfig,
    RunResult,
    TracePoint,
    run_algorithm,
    run_gsemo,
    run_one_plus_one_ea,
    run_rls_swap,
    run_semo,
    run_semo_swap,
)
from .core import (
    Dominance,
    Fitness,
    Instance,
    Item,
    Solution,
    benefit,
    benefit_tolerance,
    benefits_close,
    compare_fitness,
    dominance,
    fitness,
    total_profit,
    total_weight,
    travel_time,
)
from .experiments import (
    ExperimentSpec,
    VerifyReport,
    convergence_experiment,
    geometric_grid,
    instance_batch,
    scaling_experiment,
    verify_suite,
    write_csv,
)
from .generate import (
    GenParams,
    derive_uniform_capacity,
    gen_correlated,
    gen_uniform,
)
from .oracles import (
    PrefixOptimum,
    add_threshold,
    brute_force_optimum,
    brute_force_pareto_front,
    optimal_prefix,
    pareto_front,
    prefix_benefits,
    protected_prefix_length,
    remove_threshold,
    thresholds,
)
from .rng import SplitMix64, seed_chain

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_IDS",
    "ALGORITHMS",
    "Dominance",
    "EvalCounting",
    "ExperimentSpec",
    "Fitness",
    "GenParams",
    "InitMode",
    "Instance",
    "Item",
    "PrefixOptimum",
    "RunConfig",
    "RunResult",
    "Solution",
    "SplitMix64",
    "TracePoint",
    "VerifyReport",
    "add_threshold",
    "benefit",
    "benefit_tolerance",
    "benefits_close",
    "brute_force_optimum",
    "brute_force_pareto_front",
    "compare_fitness",
    "convergence_experiment",
    "derive_uniform_capacity",
    "dominance",
    "fitness",
    "gen_correlated",
    "gen_uniform",
    "geometric_grid",
    "instance_batch",
    "optimal_prefix",
    "pareto_front",
    "prefix_benefits",
    "protected_prefix_length",
    "remove_threshold",
    "run_algorithm",
    "run_gsemo",
    "run_one_plus_one_ea",
    "run_rls_swap",
    "run_semo",
    "run_semo_swap",
    "scaling_experiment",
    "seed_chain",
    "thresholds",
    "total_profit",
    "total_weight",
    "travel_time",
    "verify_suite",
    "write_csv",
    "__version__",
]
