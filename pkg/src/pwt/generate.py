"""Seeded random instance generation.

Two families drive all experiments: correlated instances pair descending
random profits with ascending random weights on a single travel leg, and
uniform instances reuse the same profit draw with every weight set to one.
Profit and weight streams are split off the base seed independently, so the
uniform twin of a seed has the identical profit multiset.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Instance
from .rng import SplitMix64, seed_chain

DEFAULT_CORRELATED_CAPACITY = 8000
DEFAULT_UNIFORM_CAPACITY = 72


@dataclass(frozen=True)
class GenParams:
    """Generation knobs; capacity None picks the per-family default."""

    n: int
    profit_range: tuple[int, int] = (1, 1000)
    weight_range: tuple[int, int] = (1, 1000)
    d: float = 50.0
    renting_rate: float = 70.0
    v_max: float = 1.0
    v_min: float = 0.1
    capacity: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        for lo, hi in (self.profit_range, self.weight_range):
            if not (1 <= lo <= hi):
                raise ValueError("ranges must be non-empty with positive bounds")
        if not (0 < self.v_min < self.v_max):
            raise ValueError("need 0 < v_min < v_max")
        if self.capacity is not None and self.capacity < 1:
            raise ValueError("capacity must be >= 1")


def _draw_ints(stream: SplitMix64, lo: int, hi: int, count: int) -> list[int]:
    span = hi - lo + 1
    return [lo + stream.below(span) for _ in range(count)]


def gen_correlated(params: GenParams) -> Instance:
    """Random correlated instance: profits descending, weights ascending."""
    profits = _draw_ints(
        SplitMix64(seed_chain(params.seed, "profits")), *params.profit_range, params.n
    )
    weights = _draw_ints(
        SplitMix64(seed_chain(params.seed, "weights")), *params.weight_range, params.n
    )
    profits.sort(reverse=True)
    weights.sort()
    capacity = params.capacity
    if capacity is None:
        capacity = DEFAULT_CORRELATED_CAPACITY
    return Instance(
        profits,
        weights,
        distances=[params.d],
        renting_rate=params.renting_rate,
        v_min=params.v_min,
        v_max=params.v_max,
        capacity=capacity,
    )


def gen_uniform(params: GenParams) -> Instance:
    """Unit-weight sibling: same profit draw as gen_correlated, weights 1."""
    profits = _draw_ints(
        SplitMix64(seed_chain(params.seed, "profits")), *params.profit_range, params.n
    )
    profits.sort(reverse=True)
    capacity = params.capacity
    if capacity is None:
        capacity = DEFAULT_UNIFORM_CAPACITY
    return Instance(
        profits,
        [1] * params.n,
        distances=[params.d],
        renting_rate=params.renting_rate,
        v_min=params.v_min,
        v_max=params.v_max,
        capacity=capacity,
    )


def derive_uniform_capacity(instances: list[Instance], budget: int = 8000) -> int:
    """Mean count of leading items fitting the weight budget, half-to-even.

    Used to pick a comparable capacity for the unit-weight family: each
    correlated instance contributes the length of its longest prefix whose
    weight stays within the budget.
    """
    if not instances:
        raise ValueError("need at least one instance")
    if budget < 1:
        raise ValueError("budget must be positive")
    total = 0
    for inst in instances:
        cum = np.cumsum(inst.weights)
        total += int(np.searchsorted(cum, budget, side="right"))
    count = len(instances)
    q, r = divmod(total, count)
    if 2 * r > count or (2 * r == count and q % 2 == 1):
        q += 1
    return q
