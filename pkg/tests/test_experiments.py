"""Harness behavior: grids, normalization, scaling stats, CSV output, and
the self-verification suite (including a seeded corruption canary)."""

import json
import math

import numpy as np
import pytest

from pwt import oracles
from pwt.core import Instance
from pwt.experiments import (
    CONVERGENCE_HEADER,
    DESK_SIZES,
    SCALING_HEADER,
    CheckResult,
    ExperimentSpec,
    VerifyReport,
    _step_values,
    check_sign_equivalence,
    convergence_experiment,
    geometric_grid,
    instance_batch,
    run_seed,
    sample_instance,
    scaling_experiment,
    verify_suite,
    write_csv,
)
from pwt.rng import SplitMix64


def test_spec_validation():
    assert ExperimentSpec().sizes == DESK_SIZES
    with pytest.raises(ValueError):
        ExperimentSpec(algorithms=("bogus",))
    with pytest.raises(ValueError):
        ExperimentSpec(algorithms=())
    with pytest.raises(ValueError):
        ExperimentSpec(repetitions=0)
    with pytest.raises(ValueError):
        ExperimentSpec(budget=0)
    with pytest.raises(ValueError):
        ExperimentSpec(n=0)
    with pytest.raises(ValueError):
        ExperimentSpec(sizes=(100, 100))
    with pytest.raises(ValueError):
        ExperimentSpec(sizes=())
    with pytest.raises(ValueError):
        ExperimentSpec(workers=0)


def test_instance_batch():
    batch = instance_batch(20, 7, 3)
    again = instance_batch(20, 7, 3)
    assert len(batch) == 3
    for a, b in zip(batch, again):
        assert np.array_equal(a.profits, b.profits)
        assert np.array_equal(a.weights, b.weights)
    assert all(inst.n == 20 and inst.correlated for inst in batch)
    # distinct indices draw from distinct streams
    assert not np.array_equal(batch[0].profits, batch[1].profits)
    flat = instance_batch(20, 7, 2, uniform=True)
    assert all(inst.uniform for inst in flat)


def test_run_seeds_distinct():
    seeds = {
        run_seed(0, 300, idx, algorithm, rep)
        for idx in range(5)
        for algorithm in ("rls_swap", "gsemo")
        for rep in range(3)
    }
    assert len(seeds) == 5 * 2 * 3
    assert run_seed(1, 300, 0, "rls_swap", 0) != run_seed(0, 300, 0, "rls_swap", 0)


def test_geometric_grid():
    grid = geometric_grid(10_000)
    assert grid[0] == 0 and grid[-1] == 10_000
    assert all(b > a for a, b in zip(grid, grid[1:]))
    assert {1, 2} <= set(grid)
    assert geometric_grid(1) == [0, 1]


def test_step_values():
    points = [(0, 0.0), (3, 1.0), (10, 2.0)]
    assert _step_values(points, [0, 1, 3, 5, 10, 20]) == [0.0, 0.0, 1.0, 1.0, 2.0, 2.0]
    rng = SplitMix64(4)
    points = [(0, 0.0)]
    for _ in range(30):
        points.append((points[-1][0] + 1 + rng.below(50), rng.next_double()))
    grid = sorted({rng.below(2000) for _ in range(40)})
    # naive reference: scan for the latest point at or before each grid mark
    naive = []
    for g in grid:
        cur = points[0][1]
        for e, v in points:
            if e <= g:
                cur = v
        naive.append(cur)
    assert _step_values(points, grid) == naive


def test_convergence_rows():
    spec = ExperimentSpec(
        algorithms=("rls_swap", "gsemo"), n=12, repetitions=3, budget=2000, base_seed=5
    )
    instances = instance_batch(spec.n, spec.base_seed, spec.repetitions)
    header, rows = convergence_experiment(instances, spec)
    assert header == CONVERGENCE_HEADER
    grid = geometric_grid(spec.budget)
    assert len(rows) == 2 * len(grid)
    for algorithm in spec.algorithms:
        curve = [r for r in rows if r[0] == algorithm]
        assert [r[1] for r in curve] == grid
        values = [r[2] for r in curve]
        assert all(-1e-12 <= v <= 1.0 + 1e-6 for v in values)
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert values[-1] > 0.99
        assert all(r[3] == 3 for r in curve)


def test_convergence_flat_when_zero_is_optimal():
    # No item pays for its slowdown, so the oracle optimum is the zero
    # solution and the normalized curve pins to 1.
    inst = Instance(
        [1, 1], [500, 600], distances=[50], renting_rate=1000,
        v_min=0.1, v_max=1.0, capacity=2000,
    )
    assert oracles.optimal_prefix(inst).k == 0
    spec = ExperimentSpec(algorithms=("rls_swap",), n=2, repetitions=1, budget=50)
    _header, rows = convergence_experiment([inst], spec)
    assert all(r[2] == 1.0 for r in rows)


def test_convergence_rejects_uncorrelated():
    inst = Instance(
        [1, 10], [5, 3], distances=[1], renting_rate=1,
        v_min=0.1, v_max=1.0, capacity=10,
    )
    spec = ExperimentSpec(algorithms=("rls_swap",), repetitions=1, budget=10)
    with pytest.raises(ValueError):
        convergence_experiment([inst], spec)
    with pytest.raises(ValueError):
        convergence_experiment([], spec)


def test_scaling_rows():
    spec = ExperimentSpec(
        algorithms=("rls_swap", "opo_ea"), repetitions=4, sizes=(8, 16), base_seed=2
    )
    header, rows = scaling_experiment(spec)
    assert header == SCALING_HEADER
    assert len(rows) == 2 * 2
    by_key = {(r[0], r[1]): r for r in rows}
    for algorithm in spec.algorithms:
        for n in spec.sizes:
            row = by_key[(algorithm, n)]
            mean, median, stddev, censored = row[2], row[3], row[4], row[5]
            assert math.isfinite(mean) and mean >= 0
            assert math.isfinite(median) and stddev >= 0
            assert censored == 0
    # reference curves are shared across algorithms and scale analytically
    for algorithm in spec.algorithms:
        r8, r16 = by_key[(algorithm, 8)], by_key[(algorithm, 16)]
        assert r16[6] / r8[6] == pytest.approx(4.0)
        assert r16[7] / r8[7] == pytest.approx((16 * math.log(16)) / (8 * math.log(8)))
    assert by_key[("rls_swap", 8)][6] == by_key[("opo_ea", 8)][6]


def test_write_csv(tmp_path):
    path = tmp_path / "out.csv"
    write_csv(path, ("a", "b", "c"), [["x", 1, 0.1], ["y", 2, np.float64(0.25)]])
    assert path.read_text() == "a,b,c\nx,1,0.1\ny,2,0.25\n"


def test_worker_count_does_not_change_output(tmp_path):
    instances = instance_batch(10, 3, 2)
    for workers, name in ((1, "one"), (3, "many")):
        spec = ExperimentSpec(
            algorithms=("rls_swap", "semo"), n=10, repetitions=2, budget=500,
            base_seed=3, workers=workers,
        )
        header, rows = convergence_experiment(instances, spec)
        write_csv(tmp_path / f"conv_{name}.csv", header, rows)
        spec2 = ExperimentSpec(
            algorithms=("rls_swap", "semo"), repetitions=2, sizes=(6, 9),
            base_seed=3, workers=workers,
        )
        header2, rows2 = scaling_experiment(spec2)
        write_csv(tmp_path / f"scale_{name}.csv", header2, rows2)
    assert (tmp_path / "conv_one.csv").read_bytes() == (tmp_path / "conv_many.csv").read_bytes()
    assert (tmp_path / "scale_one.csv").read_bytes() == (tmp_path / "scale_many.csv").read_bytes()


def test_verify_suite_passes():
    report = verify_suite(25, 11)
    assert report.ok
    assert len(report.results) == len(
        {r.name for r in report.results}
    ) == 11
    text = report.to_text()
    assert text.count("[PASS]") == 11 and text.endswith("verify: OK")
    with pytest.raises(ValueError):
        verify_suite(0, 11)


def test_verify_report_failure_text():
    report = VerifyReport(
        sample_count=1,
        seed=0,
        results=(CheckResult("demo", False, "broke", counterexample='{"x":1}'),),
    )
    assert not report.ok
    text = report.to_text()
    assert "[FAIL] demo: broke" in text
    assert 'counterexample: {"x":1}' in text
    assert text.endswith("verify: FAILED")


def test_sign_check_catches_threshold_corruption(monkeypatch):
    # Canary: shifting the add threshold up by the item weight (so it
    # coincides with the removal threshold) must be caught.
    real = oracles.add_threshold

    def corrupted(inst, i):
        return real(inst, i) + float(inst.weights[i])

    monkeypatch.setattr(oracles, "add_threshold", corrupted)
    result = check_sign_equivalence(500, 5)
    assert not result.passed
    assert result.counterexample is not None
    payload = json.loads(result.counterexample)
    assert "instance" in payload and "item" in payload


def test_sample_instance_profiles():
    rng = SplitMix64(9)
    for _ in range(20):
        inst = sample_instance(rng)
        assert inst.correlated and 4 <= inst.n <= 24
        strict = sample_instance(rng, strict=True)
        assert strict.strictly_correlated
        roomy = sample_instance(rng, roomy=True)
        assert roomy.capacity >= int(np.sum(roomy.weights))
