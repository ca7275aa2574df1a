"""End-to-end acceptance checks, one per shipped guarantee.

Each test prints a single [PASS]/[FAIL] line (also appended to
acceptance_report.txt at the repo root) and then asserts, so a red run
names exactly which guarantee broke.  Budget constants are pinned from
measured runs; see the values in each test.
"""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from pwt import core, oracles
from pwt.algorithms import EvalCounting, InitMode, RunConfig, run_algorithm
from pwt.core import benefits_close
from pwt.experiments import (
    DESK_SIZES,
    ExperimentSpec,
    check_optimal_prefix_brute_force,
    check_pareto_front_brute_force,
    check_sign_equivalence,
    check_threshold_monotonicity,
    check_unimodal_chain,
    convergence_experiment,
    instance_batch,
    run_seed,
    scaling_experiment,
    write_csv,
)

SEED = 0
REPORT = Path(__file__).resolve().parent.parent / "acceptance_report.txt"


@pytest.fixture(scope="module", autouse=True)
def _fresh_report():
    REPORT.write_text("")
    yield


def record(name: str, ok: bool, detail: str) -> str:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    with REPORT.open("a") as fh:
        fh.write(line + "\n")
    print(line)
    return line


@pytest.fixture(scope="module")
def correlated_suite():
    return instance_batch(300, SEED, 30)


def test_optimal_prefix_equals_brute_force():
    t0 = time.perf_counter()
    result = check_optimal_prefix_brute_force(200, SEED)
    dt = time.perf_counter() - t0
    ok = result.passed and dt < 60
    line = record(
        "optimal-prefix-vs-brute-force",
        ok,
        f"200 instances (n in [4,16]) within 1e-9 relative in {dt:.1f}s (<60s)",
    )
    assert ok, line


def test_threshold_sign_equivalence():
    result = check_sign_equivalence(1000, SEED)
    line = record(
        "threshold-sign-equivalence",
        result.passed,
        "1000 (instance, solution, item) triples outside the band, zero violations",
    )
    assert result.passed, line


def test_threshold_orderings():
    result = check_threshold_monotonicity(100, SEED)
    line = record(
        "threshold-orderings",
        result.passed,
        "add and remove thresholds strictly decrease on 100 strict instances",
    )
    assert result.passed, line


def test_prefix_benefit_chain_unimodal():
    result = check_unimodal_chain(100, SEED)
    line = record(
        "unimodal-prefix-chain",
        result.passed,
        "100 sampled chains rise then fall with at most one equality at the peak",
    )
    assert result.passed, line


def test_pareto_front_equals_brute_force():
    result = check_pareto_front_brute_force(100, SEED)
    line = record(
        "pareto-front-vs-brute-force",
        result.passed,
        "100 instances (n <= 12): analytic prefix front equals exhaustive front",
    )
    assert result.passed, line


def test_gsemo_recovers_pareto_front():
    n = 50
    budget = 20 * n**3
    instances = instance_batch(n, SEED, 30)
    recovered = 0
    for idx, inst in enumerate(instances):
        cfg = RunConfig(
            max_evaluations=budget,
            seed=run_seed(SEED, n, idx, "gsemo", 0),
            init_mode=InitMode.ZERO,
            eval_counting=EvalCounting.EFFECTIVE,
            trace_stride=budget,
        )
        run = run_algorithm("gsemo", inst, cfg)
        feasible = [s for s in run.archive if s.weight <= inst.capacity]
        front = oracles.pareto_front(inst)
        if len(feasible) == len(front) and all(
            a.weight == b.weight
            and benefits_close(core.benefit(inst, a), core.benefit(inst, b))
            for a, b in zip(feasible, front)
        ):
            recovered += 1
    ok = recovered >= 28
    line = record(
        "gsemo-front-recovery",
        ok,
        f"{recovered}/30 archives equal the oracle front within {budget} "
        f"effective evaluations at n={n} (>=28 required)",
    )
    assert ok, line


def test_rls_swap_reaches_optimum_with_monotone_h(correlated_suite):
    n = 300
    budget = n**3
    hits = 0
    h_violations = 0
    for idx, inst in enumerate(correlated_suite):
        target = oracles.optimal_prefix(inst).benefit
        cfg = RunConfig(
            max_evaluations=budget,
            target_benefit=target,
            seed=run_seed(SEED, n, idx, "rls_swap", 0),
            init_mode=InitMode.ZERO,
            eval_counting=EvalCounting.EFFECTIVE,
            trace_stride=budget,
        )
        run = run_algorithm("rls_swap", inst, cfg, track_h=True)
        hits += run.hit_target
        h_violations += run.h_violations
    ok = hits == 30 and h_violations == 0
    line = record(
        "rls-swap-optimum-and-monotone-h",
        ok,
        f"{hits}/30 runs reached the oracle optimum within n^3={budget} "
        f"effective evaluations (30/30 required); protected-prefix "
        f"violations: {h_violations} (0 required)",
    )
    assert ok, line


def test_one_plus_one_ea_uniform_runtime_bound():
    # Pinned c=2: measured max budget use 0.53 across the 30 seeded runs.
    n, p_max, c = 300, 1000, 2
    budget = math.ceil(c * n * n * math.log(max(n, p_max)))
    instances = instance_batch(n, SEED, 30, uniform=True)
    assert all(inst.capacity == 72 for inst in instances)
    hits = 0
    for idx, inst in enumerate(instances):
        target = oracles.optimal_prefix(inst).benefit
        cfg = RunConfig(
            max_evaluations=budget,
            target_benefit=target,
            seed=run_seed(SEED, n, idx, "opo_ea", 0),
            init_mode=InitMode.ZERO,
            eval_counting=EvalCounting.EFFECTIVE,
            trace_stride=budget,
        )
        hits += run_algorithm("opo_ea", inst, cfg).hit_target
    ok = hits >= 28
    line = record(
        "one-plus-one-ea-uniform-bound",
        ok,
        f"{hits}/30 uniform runs (n=300, C=72) reached the optimum within "
        f"{c}*n^2*ln(max(n,p_max))={budget} effective evaluations (>=28 required)",
    )
    assert ok, line


def test_convergence_trends(correlated_suite):
    spec = ExperimentSpec(
        n=300, repetitions=30, budget=100_000, base_seed=SEED, workers=1
    )
    _header, rows = convergence_experiment(correlated_suite, spec)
    finals = {}
    monotone = True
    for algorithm in spec.algorithms:
        curve = [r[2] for r in rows if r[0] == algorithm]
        monotone = monotone and all(b >= a for a, b in zip(curve, curve[1:]))
        finals[algorithm] = curve[-1]
    ordered = finals["rls_swap"] >= finals["opo_ea"]
    ok = monotone and ordered
    line = record(
        "convergence-trends",
        ok,
        "at 1e5 effective evaluations mean normalized benefit is "
        + ", ".join(f"{a}={finals[a]:.6f}" for a in spec.algorithms)
        + f"; rls_swap >= opo_ea: {ordered}; all curves monotone: {monotone}",
    )
    assert ok, line


def test_scaling_trends():
    t0 = time.perf_counter()
    spec = ExperimentSpec(repetitions=30, sizes=DESK_SIZES, base_seed=SEED, workers=8)
    _header, rows = scaling_experiment(spec)
    wall = time.perf_counter() - t0
    means = {(r[0], r[1]): r[2] for r in rows}
    rls = np.array([means[("rls_swap", n)] for n in DESK_SIZES])
    ok_finite = all(math.isfinite(v) for v in means.values())
    slope = float(
        np.polyfit(np.log(np.array(DESK_SIZES, dtype=float)), np.log(rls), 1)[0]
    )
    mo_ge_rls = all(
        means[(algorithm, n)] >= means[("rls_swap", n)]
        for algorithm in ("gsemo", "semo", "semo_swap")
        for n in DESK_SIZES
    )
    ok = ok_finite and 1.0 <= slope <= 2.5 and mo_ge_rls and wall < 7200
    line = record(
        "scaling-trends",
        ok,
        f"rls_swap log-log slope {slope:.3f} in [1.0, 2.5]; multi-objective "
        f"mean evaluations >= rls_swap at every size: {mo_ge_rls}; "
        f"wall {wall:.0f}s with 8 workers (<7200s)",
    )
    assert ok, line


def test_worker_count_determinism(tmp_path):
    outputs = {}
    for workers in (1, 8):
        conv_spec = ExperimentSpec(
            n=40, repetitions=6, budget=20_000, base_seed=SEED, workers=workers
        )
        instances = instance_batch(40, SEED, 6)
        header, rows = convergence_experiment(instances, conv_spec)
        conv = tmp_path / f"conv_{workers}.csv"
        write_csv(conv, header, rows)
        scale_spec = ExperimentSpec(
            repetitions=5, sizes=(50, 100, 200), base_seed=SEED, workers=workers
        )
        header, rows = scaling_experiment(scale_spec)
        scale = tmp_path / f"scale_{workers}.csv"
        write_csv(scale, header, rows)
        outputs[workers] = (conv.read_bytes(), scale.read_bytes())
    ok = outputs[1] == outputs[8]
    line = record(
        "worker-count-determinism",
        ok,
        "convergence and scaling CSVs byte-identical at worker counts 1 and 8",
    )
    assert ok, line
