"""Throughput comparison between the compiled kernel and the pure-Python
engine on identical seeded runs.

Usage: python3 benchmarks/bench_engines.py [--n 300] [--budget 200000]
"""

import argparse
import time

import numpy as np

from pwt import engine
from pwt.algorithms import ALGORITHM_IDS, ALGORITHMS
from pwt.experiments import instance_batch


def bench(fn, args, budget):
    t0 = time.perf_counter()
    result = fn(*args)
    dt = time.perf_counter() - t0
    assert result["raw_iterations"] >= budget
    return dt, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=300)
    parser.add_argument("--budget", type=int, default=200_000)
    parser.add_argument("--pure-budget", type=int, default=20_000,
                        help="smaller budget for the slow engine, scaled up")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if engine.ENGINE != "compiled":
        print("compiled kernel unavailable; nothing to compare")
        return 0

    inst = instance_batch(args.n, args.seed, 1)[0]
    print(f"n={args.n}, compiled budget {args.budget}, pure budget {args.pure_budget}")
    print(f"{'algorithm':<10} {'compiled ev/s':>14} {'pure ev/s':>12} {'speedup':>8}")
    for algorithm in ALGORITHMS:
        raw = (
            inst.weights, inst.profits, inst.cities, inst.distances,
            inst.renting_rate, inst.v_min, inst.v_max, inst.nu, inst.capacity,
            ALGORITHM_IDS[algorithm], args.seed, args.budget,
            False, 0.0, False, False, 10**9, False, 0,
            np.zeros(0, dtype=np.float64),
        )
        dt_c, res_c = bench(engine.run, raw, args.budget)
        raw_pure = raw[:11] + (args.pure_budget,) + raw[12:]
        dt_p, res_p = bench(engine.run_pure, raw_pure, args.pure_budget)
        # same seed and a pure budget prefix: trajectories must agree
        assert res_p["raw_iterations"] <= res_c["raw_iterations"]
        rate_c = res_c["raw_iterations"] / dt_c
        rate_p = res_p["raw_iterations"] / dt_p
        print(f"{algorithm:<10} {rate_c:>14.0f} {rate_p:>12.0f} {rate_c / rate_p:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
