"""Experiment orchestration: instance batches, the convergence and scaling
studies, and the self-verification suite.

Runs fan out over a fork-based process pool keyed by (instance, algorithm,
repetition); every run seed is derived from the experiment base seed with
the documented stream-split rule, and results are assembled in a fixed
order, so output CSV bytes do not depend on the worker count.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import statistics
from dataclasses import dataclass

import numpy as np

from . import core, oracles
from .algorithms import (
    ALGORITHM_IDS,
    ALGORITHMS,
    EvalCounting,
    InitMode,
    RunConfig,
    run_algorithm,
)
from .core import Instance, Solution, benefits_close
from .generate import GenParams, gen_correlated, gen_uniform
from .rng import SplitMix64, seed_chain

#: Desk-scale default for the scaling study; the full sweep adds 5000, 10000.
DESK_SIZES = (100, 200, 500, 1000, 2000)
FULL_SIZES = (100, 200, 500, 1000, 2000, 5000, 10000)

#: Scaling runs stop after this multiple of n**2 evaluations and count as
#: censored.
SAFETY_CEILING_FACTOR = 100

CONVERGENCE_HEADER = ("algorithm", "evaluations", "meanNormalizedBenefit", "repetitions")
SCALING_HEADER = (
    "algorithm",
    "n",
    "meanEvals",
    "medianEvals",
    "stddev",
    "censoredCount",
    "refN2",
    "refNLogN",
)


@dataclass(frozen=True)
class ExperimentSpec:
    """Shared experiment settings.

    ``repetitions`` is the number of instances per setting (the protocol
    runs each algorithm once per instance).  ``budget`` applies to the
    convergence study; scaling runs use the safety ceiling instead.
    """

    algorithms: tuple[str, ...] = ALGORITHMS
    n: int = 300
    repetitions: int = 30
    budget: int = 10_000_000
    sizes: tuple[int, ...] = DESK_SIZES
    base_seed: int = 0
    workers: int = 1
    uniform: bool = False

    def __post_init__(self):
        unknown = [a for a in self.algorithms if a not in ALGORITHM_IDS]
        if unknown or not self.algorithms:
            raise ValueError(f"unknown algorithms {unknown}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])) or not self.sizes:
            raise ValueError("sizes must be strictly increasing and non-empty")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def instance_batch(
    n: int, base_seed: int, count: int, *, uniform: bool = False
) -> list[Instance]:
    """The canonical seeded instance set shared by CLI and experiments."""
    gen = gen_uniform if uniform else gen_correlated
    return [
        gen(GenParams(n=n, seed=seed_chain(base_seed, "instance", n, idx)))
        for idx in range(count)
    ]


def run_seed(base_seed: int, n: int, instance_idx: int, algorithm: str, rep: int) -> int:
    """Stream-split rule for run seeds (documented in rng)."""
    return seed_chain(base_seed, "run", n, instance_idx, ALGORITHM_IDS[algorithm], rep)


def geometric_grid(budget: int) -> list[int]:
    """Log-friendly evaluation grid: rounded powers of 1.05 plus 0 and budget."""
    points = {0, budget}
    x = 1.0
    while True:
        g = round(x)
        if g >= budget:
            break
        if g >= 1:
            points.add(g)
        x *= 1.05
    return sorted(points)


def _pool_map(workers: int, fn, tasks):
    if workers == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        return pool.map(fn, tasks, chunksize=1)


def _step_values(points: list[tuple[int, float]], grid: list[int]) -> list[float]:
    """Best-so-far value at each grid point (last point at or before it)."""
    out = []
    i = 0
    cur = points[0][1]
    for g in grid:
        while i < len(points) and points[i][0] <= g:
            cur = points[i][1]
            i += 1
        out.append(cur)
    return out


# -- convergence study (normalized best-so-far over a log grid) -------------


def _convergence_task(task):
    inst, algorithm, seed, budget = task
    cfg = RunConfig(
        max_evaluations=budget,
        seed=seed,
        init_mode=InitMode.ZERO,
        eval_counting=EvalCounting.EFFECTIVE,
        trace_stride=budget,
    )
    result = run_algorithm(algorithm, inst, cfg)
    return [(p.evaluations, p.benefit) for p in result.trace]


def convergence_experiment(
    instances: list[Instance], spec: ExperimentSpec
) -> tuple[tuple[str, ...], list[list]]:
    """Mean normalized best-so-far benefit per algorithm on a shared grid.

    Each run starts from the zero solution; its best-so-far benefit is
    mapped to [0, 1] with 0 at the zero solution and 1 at the oracle
    optimum, then averaged across instances per grid point.
    """
    if not instances:
        raise ValueError("need at least one instance")
    anchors = []
    for inst in instances:
        if not inst.correlated:
            raise ValueError("convergence normalization needs correlated instances")
        zero_b = core.benefit(inst, Solution.zero(inst))
        best_b = oracles.optimal_prefix(inst).benefit
        anchors.append((zero_b, best_b))
    tasks = [
        (inst, algorithm, run_seed(spec.base_seed, inst.n, idx, algorithm, 0), spec.budget)
        for algorithm in spec.algorithms
        for idx, inst in enumerate(instances)
    ]
    traces = _pool_map(spec.workers, _convergence_task, tasks)
    grid = geometric_grid(spec.budget)
    rows: list[list] = []
    per_alg = len(instances)
    for a_idx, algorithm in enumerate(spec.algorithms):
        normalized = []
        for idx in range(per_alg):
            zero_b, best_b = anchors[idx]
            span = best_b - zero_b
            trace = traces[a_idx * per_alg + idx]
            values = _step_values(trace, grid)
            if benefits_close(best_b, zero_b):
                # Zero solution already optimal: the curve is flat at 1.
                normalized.append([1.0] * len(grid))
            else:
                normalized.append([(v - zero_b) / span for v in values])
        for g_idx, g in enumerate(grid):
            mean = sum(normalized[i][g_idx] for i in range(per_alg)) / per_alg
            rows.append([algorithm, g, mean, per_alg])
    return CONVERGENCE_HEADER, rows


# -- scaling study (evaluations to reach the oracle optimum) -----------------


def _scaling_task(task):
    inst, algorithm, seed, ceiling, target = task
    cfg = RunConfig(
        max_evaluations=ceiling,
        target_benefit=target,
        seed=seed,
        init_mode=InitMode.ZERO,
        eval_counting=EvalCounting.EFFECTIVE,
        trace_stride=ceiling,
    )
    result = run_algorithm(algorithm, inst, cfg)
    return (result.hit_target, result.evaluations)


def scaling_experiment(spec: ExperimentSpec) -> tuple[tuple[str, ...], list[list]]:
    """Evaluations-to-optimum statistics per algorithm and instance size.

    Per size, ``spec.repetitions`` fresh correlated instances are generated
    and each algorithm runs once per instance to the oracle optimum, capped
    at the safety ceiling of 100 n^2 evaluations (capped runs are censored
    and excluded from the statistics).  The reference columns are n^2 and
    n log n scaled to the across-algorithm mean at the smallest size.
    """
    tasks = []
    for n in spec.sizes:
        instances = instance_batch(n, spec.base_seed, spec.repetitions)
        targets = [oracles.optimal_prefix(inst).benefit for inst in instances]
        ceiling = SAFETY_CEILING_FACTOR * n * n
        for algorithm in spec.algorithms:
            for idx, inst in enumerate(instances):
                tasks.append(
                    (
                        inst,
                        algorithm,
                        run_seed(spec.base_seed, n, idx, algorithm, 0),
                        ceiling,
                        targets[idx],
                    )
                )
    outcomes = _pool_map(spec.workers, _scaling_task, tasks)
    stats: dict[tuple[str, int], tuple[float, float, float, int]] = {}
    t = 0
    for n in spec.sizes:
        for algorithm in spec.algorithms:
            evals = []
            censored = 0
            for _ in range(spec.repetitions):
                hit, used = outcomes[t]
                t += 1
                if hit:
                    evals.append(used)
                else:
                    censored += 1
            if evals:
                mean = sum(evals) / len(evals)
                median = float(statistics.median(evals))
                stddev = statistics.stdev(evals) if len(evals) > 1 else 0.0
            else:
                mean = median = stddev = float("nan")
            stats[(algorithm, n)] = (mean, median, stddev, censored)
    base_n = spec.sizes[0]
    base_means = [
        stats[(a, base_n)][0]
        for a in spec.algorithms
        if math.isfinite(stats[(a, base_n)][0])
    ]
    anchor = sum(base_means) / len(base_means) if base_means else float("nan")
    rows: list[list] = []
    for algorithm in spec.algorithms:
        for n in spec.sizes:
            mean, median, stddev, censored = stats[(algorithm, n)]
            ref_n2 = anchor * (n / base_n) ** 2
            ref_nlogn = anchor * (n * math.log(n)) / (base_n * math.log(base_n))
            rows.append(
                [algorithm, n, mean, median, stddev, censored, ref_n2, ref_nlogn]
            )
    return SCALING_HEADER, rows


def write_csv(path, header, rows):
    """Deterministic CSV: repr floats, plain ints, newline-terminated lines."""

    def fmt(v):
        if isinstance(v, float):
            return repr(float(v))
        return str(v)

    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")


# -- verification suite ------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None


@dataclass(frozen=True)
class VerifyReport:
    sample_count: int
    seed: int
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = [
            f"verify: {self.sample_count} samples, seed {self.seed}",
        ]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"  [{status}] {r.name}: {r.detail}")
            if r.counterexample:
                lines.append(f"         counterexample: {r.counterexample}")
        lines.append("verify: OK" if self.ok else "verify: FAILED")
        return "\n".join(lines)


def _ce(inst: Instance, **context) -> str:
    payload = {"instance": inst.to_dict()}
    payload.update(context)
    return json.dumps(payload)


def sample_instance(
    rng: SplitMix64,
    *,
    strict: bool = False,
    roomy: bool = False,
    lo_n: int = 4,
    hi_n: int = 24,
) -> Instance:
    """Random correlated test instance with a positive renting rate.

    With ``strict`` the profit and weight draws are made distinct so the
    instance is strictly correlated.  With ``roomy`` the capacity covers the
    total weight, keeping every prefix on the linear part of the velocity
    function (the domain where the benefit chain is unimodal; past capacity
    the clamped travel time is constant, so benefit rises with profit again,
    and only the constraint objective ranks those solutions).
    """
    n = lo_n + rng.below(hi_n - lo_n + 1)
    span = 1000

    def draw(count):
        if not strict:
            return [1 + rng.below(span) for _ in range(count)]
        seen: set[int] = set()
        while len(seen) < count:
            seen.add(1 + rng.below(span))
        return sorted(seen)

    profits = sorted(draw(n), reverse=True)
    weights = sorted(draw(n))
    total = sum(weights)
    if roomy:
        capacity = total + rng.below(total)
    else:
        capacity = max(1, total // 4 + rng.below(total))
    return Instance(
        profits,
        weights,
        distances=[1 + rng.below(100)],
        renting_rate=1 + rng.below(100),
        v_min=0.1,
        v_max=1.0,
        capacity=capacity,
    )


def _random_bits(rng: SplitMix64, inst: Instance) -> Solution:
    density = rng.next_double()
    bits = np.zeros(inst.n, dtype=np.uint8)
    for i in range(inst.n):
        if rng.next_double() < density:
            bits[i] = 1
    return Solution.from_bits(inst, bits)


#: Weight-space margin around a threshold below which sign checks skip the
#: triple (real arithmetic cannot certify the strict inequality there).
SIGN_BAND = 1e-6


def check_sign_equivalence(sample_count: int, seed: int) -> CheckResult:
    """Adding helps iff the weight is below the item's add threshold; dual
    statement for removal.  Samples only situations with both velocities
    above the clamp."""
    rng = SplitMix64(seed_chain(seed, "sign"))
    done = 0
    attempts = 0
    while done < sample_count and attempts < 200 * sample_count:
        attempts += 1
        inst = sample_instance(rng)
        s = _random_bits(rng, inst)
        i = rng.below(inst.n)
        w_i = int(inst.weights[i])
        thr_add = oracles.add_threshold(inst, i)
        thr_rem = oracles.remove_threshold(inst, i)
        if s.bits[i] == 0:
            if s.weight + w_i > inst.capacity:
                continue
            if abs(s.weight - thr_add) <= SIGN_BAND * max(1.0, abs(thr_add)):
                continue
            grew = core.benefit(inst, s.flip(inst, i)) > core.benefit(inst, s)
            if grew != (s.weight < thr_add):
                return CheckResult(
                    "threshold-sign-equivalence",
                    False,
                    f"add mismatch at item {i}",
                    _ce(inst, bits="".join(map(str, s.bits.tolist())), item=i),
                )
        else:
            if s.weight > inst.capacity:
                continue
            if abs(s.weight - thr_rem) <= SIGN_BAND * max(1.0, abs(thr_rem)):
                continue
            grew = core.benefit(inst, s.flip(inst, i)) > core.benefit(inst, s)
            if grew != (s.weight > thr_rem):
                return CheckResult(
                    "threshold-sign-equivalence",
                    False,
                    f"remove mismatch at item {i}",
                    _ce(inst, bits="".join(map(str, s.bits.tolist())), item=i),
                )
        done += 1
    if done < sample_count:
        return CheckResult(
            "threshold-sign-equivalence",
            False,
            f"sampler starved: only {done}/{sample_count} usable triples",
        )
    return CheckResult(
        "threshold-sign-equivalence", True, f"{done} add/remove triples agree"
    )


def check_threshold_monotonicity(sample_count: int, seed: int) -> CheckResult:
    """Both threshold sequences strictly decrease on strictly correlated
    instances."""
    rng = SplitMix64(seed_chain(seed, "mono"))
    for _ in range(sample_count):
        inst = sample_instance(rng, strict=True)
        add, rem = oracles.thresholds(inst)
        if not (np.all(np.diff(add) < 0) and np.all(np.diff(rem) < 0)):
            return CheckResult(
                "threshold-monotonicity", False, "non-decreasing step", _ce(inst)
            )
    return CheckResult(
        "threshold-monotonicity", True, f"{sample_count} instances strictly decreasing"
    )


def check_unimodal_chain(sample_count: int, seed: int) -> CheckResult:
    """Prefix benefits rise strictly, then fall strictly, with at most one
    tolerance-level equality at the peak.

    Sampled with capacity above the total weight: the chain statement lives
    on the linear part of the velocity function, and past capacity the
    clamped benefit grows with profit again while the constraint objective
    takes over the ranking.
    """
    rng = SplitMix64(seed_chain(seed, "chain"))
    for _ in range(sample_count):
        inst = sample_instance(rng, roomy=True)
        b = oracles.prefix_benefits(inst)
        o = oracles.optimal_prefix(inst).unconstrained_k
        ok = True
        for i in range(inst.n):
            close = benefits_close(b[i + 1], b[i])
            if i < o:
                ok = ok and not close and b[i + 1] > b[i]
            elif i == o:
                ok = ok and (close or b[i + 1] < b[i])
            else:
                ok = ok and not close and b[i + 1] < b[i]
        if not ok:
            return CheckResult("unimodal-prefix-chain", False, "chain broken", _ce(inst))
    return CheckResult("unimodal-prefix-chain", True, f"{sample_count} chains unimodal")


def check_prefix_dominance(sample_count: int, seed: int) -> CheckResult:
    """Among same-cardinality selections the prefix has minimal weight and
    maximal benefit (exhaustive for small n)."""
    rng = SplitMix64(seed_chain(seed, "dom"))
    for _ in range(sample_count):
        inst = sample_instance(rng, lo_n=4, hi_n=12)
        all_w, all_p = oracles._enumerate_weights_profits(inst)
        all_b = oracles._benefit_vector(inst, all_w, all_p)
        pref_w = np.concatenate(([0], np.cumsum(inst.weights)))
        pref_b = oracles.prefix_benefits(inst)
        cards = np.array([bin(m).count("1") for m in range(1 << inst.n)])
        tol = core.REL_EPS * np.maximum(
            1.0, np.maximum(np.abs(all_b), np.abs(pref_b[cards]))
        )
        bad = (all_w < pref_w[cards]) | (all_b > pref_b[cards] + tol)
        if np.any(bad):
            mask = int(np.flatnonzero(bad)[0])
            bits = oracles._bits_of_index(mask, inst.n)
            return CheckResult(
                "prefix-dominance",
                False,
                f"cardinality {int(cards[mask])}",
                _ce(inst, bits="".join(map(str, bits.tolist()))),
            )
    return CheckResult("prefix-dominance", True, f"{sample_count} instances exhausted")


def check_optimal_prefix_brute_force(sample_count: int, seed: int) -> CheckResult:
    """Analytic peak equals exhaustive search within tolerance."""
    rng = SplitMix64(seed_chain(seed, "opt"))
    for _ in range(sample_count):
        inst = sample_instance(rng, lo_n=4, hi_n=16)
        analytic = oracles.optimal_prefix(inst).benefit
        _sol, brute = oracles.brute_force_optimum(inst)
        if not benefits_close(analytic, brute):
            return CheckResult(
                "optimal-prefix-vs-brute-force",
                False,
                f"analytic {analytic!r} vs brute {brute!r}",
                _ce(inst),
            )
    return CheckResult(
        "optimal-prefix-vs-brute-force", True, f"{sample_count} instances agree"
    )


def check_pareto_front_brute_force(sample_count: int, seed: int) -> CheckResult:
    """Analytic front (prefixes up to the constrained peak) equals the
    exhaustive non-dominated set."""
    rng = SplitMix64(seed_chain(seed, "front"))
    for _ in range(sample_count):
        inst = sample_instance(rng, lo_n=4, hi_n=12)
        analytic = [(s.weight, core.benefit(inst, s)) for s in oracles.pareto_front(inst)]
        brute = [
            (s.weight, core.benefit(inst, s))
            for s in oracles.brute_force_pareto_front(inst)
        ]
        if len(analytic) != len(brute) or any(
            wa != wb or not benefits_close(ba, bb)
            for (wa, ba), (wb, bb) in zip(analytic, brute)
        ):
            return CheckResult(
                "pareto-front-vs-brute-force",
                False,
                f"{len(analytic)} analytic vs {len(brute)} brute points",
                _ce(inst),
            )
    return CheckResult(
        "pareto-front-vs-brute-force", True, f"{sample_count} fronts identical"
    )


def check_generator_properties(sample_count: int, seed: int) -> CheckResult:
    """Generated instances are correlated; uniform twins share profits; the
    profit mean over 10**4 draws is within 3 sigma of the range mean."""
    for idx in range(max(1, sample_count // 10)):
        params = GenParams(n=50, seed=seed_chain(seed, "gen", idx))
        inst = gen_correlated(params)
        if not inst.correlated:
            return CheckResult("generator-properties", False, "not correlated", _ce(inst))
        twin = gen_uniform(params)
        if not twin.uniform or sorted(twin.profits) != sorted(inst.profits):
            return CheckResult(
                "generator-properties", False, "uniform twin mismatch", _ce(inst)
            )
    big = gen_correlated(GenParams(n=10_000, seed=seed_chain(seed, "gen-mean")))
    mean = float(np.mean(big.profits))
    sigma = math.sqrt((1000.0**2 - 1.0) / 12.0) / math.sqrt(10_000)
    if abs(mean - 500.5) > 3 * sigma:
        return CheckResult(
            "generator-properties", False, f"profit mean {mean} off by >3 sigma", None
        )
    return CheckResult(
        "generator-properties", True, f"profit mean {mean:.2f} within 3 sigma"
    )


def check_instance_round_trip(sample_count: int, seed: int) -> CheckResult:
    """JSON save/load reproduces the instance exactly."""
    rng = SplitMix64(seed_chain(seed, "io"))
    for _ in range(max(1, sample_count // 10)):
        inst = sample_instance(rng)
        back = Instance.from_dict(json.loads(json.dumps(inst.to_dict())))
        same = (
            np.array_equal(back.profits, inst.profits)
            and np.array_equal(back.weights, inst.weights)
            and np.array_equal(back.distances, inst.distances)
            and back.renting_rate == inst.renting_rate
            and back.v_min == inst.v_min
            and back.v_max == inst.v_max
            and back.capacity == inst.capacity
            and back.nu == inst.nu
        )
        if not same:
            return CheckResult("instance-round-trip", False, "field drift", _ce(inst))
    return CheckResult("instance-round-trip", True, "round trips exact")


def check_clamped_travel_time(sample_count: int, seed: int) -> CheckResult:
    """At and beyond capacity the velocity is the minimum one exactly."""
    rng = SplitMix64(seed_chain(seed, "clamp"))
    for _ in range(max(1, sample_count // 10)):
        base = sample_instance(rng)
        # Pin capacity to the full load so W == C holds exactly.
        inst = Instance(
            base.profits,
            base.weights,
            distances=base.distances,
            renting_rate=base.renting_rate,
            v_min=base.v_min,
            v_max=base.v_max,
            capacity=int(np.sum(base.weights)),
        )
        full = Solution.prefix(inst, inst.n)
        expect = float(inst.distances[0]) / inst.v_min
        got = core.travel_time(inst, full)
        if got != expect:
            return CheckResult(
                "clamped-travel-time", False, f"{got!r} != {expect!r}", _ce(inst)
            )
    return CheckResult("clamped-travel-time", True, "clamp exact at capacity")


def check_engine_matches_core(sample_count: int, seed: int) -> CheckResult:
    """A short run's reported fitness equals the core evaluation of its
    reported solution (cross-checks the incremental bookkeeping)."""
    rng = SplitMix64(seed_chain(seed, "engine"))
    for idx in range(max(1, sample_count // 10)):
        inst = sample_instance(rng)
        for algorithm in ALGORITHMS:
            cfg = RunConfig(
                max_evaluations=500,
                seed=seed_chain(seed, "engine-run", idx),
                init_mode=InitMode.UNIFORM_RANDOM,
                trace_stride=100,
            )
            result = run_algorithm(algorithm, inst, cfg)
            expect = core.fitness(inst, result.best_solution)
            if (
                expect.violation != result.best_fitness.violation
                or expect.benefit != result.best_fitness.benefit
            ):
                return CheckResult(
                    "engine-matches-core",
                    False,
                    f"{algorithm}: {result.best_fitness} vs {expect}",
                    _ce(inst),
                )
    return CheckResult("engine-matches-core", True, "run fitness matches evaluation")


def check_archive_invariants(sample_count: int, seed: int) -> CheckResult:
    """Final archives are mutually non-dominated with unique weights and
    correct cardinality bookkeeping."""
    rng = SplitMix64(seed_chain(seed, "arch"))
    for idx in range(max(1, sample_count // 10)):
        inst = sample_instance(rng)
        for algorithm in ("gsemo", "semo", "semo_swap"):
            cfg = RunConfig(
                max_evaluations=2000,
                seed=seed_chain(seed, "arch-run", idx),
                init_mode=InitMode.UNIFORM_RANDOM,
                trace_stride=1000,
            )
            result = run_algorithm(algorithm, inst, cfg)
            entries = result.archive
            weights = [s.weight for s in entries]
            if len(set(weights)) != len(weights) or weights != sorted(weights):
                return CheckResult(
                    "archive-invariants", False, "weights not unique-sorted", _ce(inst)
                )
            fits = [core.fitness(inst, s) for s in entries]
            for a, b in zip(fits, fits[1:]):
                if core.compare_fitness(b, a) <= 0:
                    return CheckResult(
                        "archive-invariants", False, "fitness not increasing", _ce(inst)
                    )
    return CheckResult("archive-invariants", True, "staircase holds")


VERIFY_CHECKS = (
    check_sign_equivalence,
    check_threshold_monotonicity,
    check_unimodal_chain,
    check_prefix_dominance,
    check_optimal_prefix_brute_force,
    check_pareto_front_brute_force,
    check_generator_properties,
    check_instance_round_trip,
    check_clamped_travel_time,
    check_engine_matches_core,
    check_archive_invariants,
)


def verify_suite(sample_count: int, seed: int) -> VerifyReport:
    """Run every self-check on freshly sampled data."""
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    results = tuple(check(sample_count, seed) for check in VERIFY_CHECKS)
    return VerifyReport(sample_count=sample_count, seed=seed, results=results)
