"""Analytic optima and exhaustive baselines for two-city instances.

For a single travel leg the marginal effect of an item depends only on the
total carried weight, which yields a closed-form weight threshold per item:
adding item ``i`` to a selection of weight ``W`` strictly improves the
benefit exactly when ``W < add_threshold(i)``, and removing it strictly
improves exactly when ``W > add_threshold(i) + w_i``.

On correlated instances (profits non-increasing, weights non-decreasing)
these thresholds order the prefix selections ``s_0, s_1, ..., s_n`` (``s_i``
takes the first ``i`` items) into a unimodal benefit chain, so both the
unconstrained and the capacity-constrained optimum are prefixes and the
Pareto front of (weight, fitness) is exactly the feasible ascending part of
the chain.  Everything here is O(n) or O(n log n); the ``brute_force_*``
functions enumerate all selections and exist to validate the analytic
results on small instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    Instance,
    Solution,
    benefit,
    benefit_tolerance,
    benefits_close,
)

#: Enumeration guards: 2**22 float64 rows stay under a quarter gigabyte.
_MAX_ENUM_N = 22
_MAX_PARETO_N = 20


def _require_single_leg(inst: Instance):
    if inst.m != 1:
        raise ValueError("threshold analysis requires a single travel leg (two cities)")


def add_threshold(inst: Instance, idx: int) -> float:
    """Carried weight below which adding item ``idx`` improves the benefit.

    Solves the marginal-gain equation p = R*d*nu*w / ((vmax-nu*W)(vmax-nu*(W+w)))
    for W.  Valid while both velocities stay above the clamp, i.e. for
    selections with W + w <= C.  A zero renting rate degrades it to
    vmax/nu - w, which exceeds C - w, so every addition then pays off
    everywhere it is meaningful.
    """
    _require_single_leg(inst)
    w = float(inst.weights[idx])
    p = float(inst.profits[idx])
    d = float(inst.distances[0])
    rel = 4.0 * inst.renting_rate * d / (inst.nu * w * p)
    return inst.v_max / inst.nu - 0.5 * w * (1.0 + math.sqrt(1.0 + rel))


def remove_threshold(inst: Instance, idx: int) -> float:
    """Carried weight above which dropping item ``idx`` improves the benefit."""
    return add_threshold(inst, idx) + float(inst.weights[idx])


def thresholds(inst: Instance) -> tuple[np.ndarray, np.ndarray]:
    """Per-item (add, remove) threshold arrays."""
    add = np.array([add_threshold(inst, i) for i in range(inst.n)])
    return add, add + inst.weights.astype(np.float64)


def prefix_benefits(inst: Instance) -> np.ndarray:
    """Benefits of the n+1 prefix selections, computed in one vector pass."""
    _require_single_leg(inst)
    wc = np.concatenate([[0], np.cumsum(inst.weights)])
    pc = np.concatenate([[0], np.cumsum(inst.profits)])
    return _benefit_vector(inst, wc, pc)


def _benefit_vector(inst: Instance, weights: np.ndarray, profits: np.ndarray) -> np.ndarray:
    # Same expression order as core.benefit so values match bit for bit.
    d = float(inst.distances[0])
    vel = np.where(
        weights >= inst.capacity,
        inst.v_min,
        inst.v_max - inst.nu * weights.astype(np.float64),
    )
    return profits.astype(np.float64) - inst.renting_rate * (d / vel)


@dataclass(frozen=True)
class PrefixOptimum:
    """Location of the benefit peak on the prefix chain.

    ``k`` is the constrained argmax (longest feasible prefix at or before the
    peak), ``unconstrained_k`` the capacity-ignoring peak, ``benefit`` the
    value at ``k``, and ``tie`` whether the next prefix is feasible and
    attains the same benefit within tolerance, i.e. the constrained optimum
    is not unique on the chain.
    """

    k: int
    benefit: float
    tie: bool
    unconstrained_k: int


def optimal_prefix(inst: Instance) -> PrefixOptimum:
    """Peak of the prefix benefit chain of a correlated instance.

    The chain rises strictly until the carried weight first reaches the next
    item's add threshold, then falls strictly, so the first non-increase
    locates the unconstrained peak; equality within tolerance is counted as
    a non-increase, which is what makes the threshold-equality tie land on
    the earlier prefix.
    """
    if not inst.correlated:
        raise ValueError("prefix optimality requires a correlated instance")
    b = prefix_benefits(inst)
    n = inst.n
    o = n
    for i in range(n):
        if benefits_close(b[i + 1], b[i]) or b[i + 1] < b[i]:
            o = i
            break
    wc = np.concatenate([[0], np.cumsum(inst.weights)])
    kmax = int(np.searchsorted(wc, inst.capacity, side="right")) - 1
    k = min(o, kmax)
    tie = (
        k == o
        and o < n
        and benefits_close(b[o], b[o + 1])
        and wc[o + 1] <= inst.capacity
    )
    return PrefixOptimum(k=k, benefit=float(b[k]), tie=bool(tie), unconstrained_k=o)


def pareto_front(inst: Instance) -> list[Solution]:
    """The trade-off front of a correlated instance: prefixes 0..k.

    Weight strictly increases and fitness strictly rises along the returned
    list (modulo a possible tolerance-level tie at the peak), so no member
    dominates another and every other selection is dominated by one of them.
    """
    k = optimal_prefix(inst).k
    return [Solution.prefix(inst, i) for i in range(k + 1)]


def protected_prefix_length(
    inst: Instance,
    s: Solution,
    *,
    k: int | None = None,
    remove_thresholds: np.ndarray | None = None,
) -> int:
    """Longest leading run of items that no benefit-improving step removes.

    Item ``i`` (0-based) in the run is protected when the current weight is
    strictly below its remove threshold; thresholds are non-increasing on
    correlated instances, so the predicate is downward closed and the result
    is well-defined.  Capped at the constrained peak ``k`` since later items
    play no part in reaching the optimum.  A selection whose weight lands
    exactly on a threshold admits an equal-benefit removal and is counted as
    unprotected there.  Only meaningful for feasible selections: accepted
    trajectories keep the run length non-decreasing once feasible.
    """
    if s.weight > inst.capacity:
        raise ValueError("protected prefix length is defined for feasible selections")
    if k is None:
        k = optimal_prefix(inst).k
    if remove_thresholds is None:
        remove_thresholds = thresholds(inst)[1]
    bits = s.bits
    w = s.weight
    h = 0
    for i in range(min(k, inst.n)):
        if bits[i] != 1 or not (w < remove_thresholds[i]):
            break
        h = i + 1
    return h


# -- exhaustive baselines --------------------------------------------------


def _enumerate_weights_profits(inst: Instance) -> tuple[np.ndarray, np.ndarray]:
    """Weight/profit sums of all 2**n selections.

    Index encoding puts item 0 in the top bit, so a smaller index is a
    lexicographically smaller bit vector and first-hit argmax picks the
    lexicographically smallest maximizer.
    """
    w = np.zeros(1, dtype=np.int64)
    p = np.zeros(1, dtype=np.int64)
    for i in range(inst.n - 1, -1, -1):
        w = np.concatenate([w, w + inst.weights[i]])
        p = np.concatenate([p, p + inst.profits[i]])
    return w, p


def _bits_of_index(index: int, n: int) -> np.ndarray:
    return np.array([(index >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.uint8)


def brute_force_optimum(inst: Instance) -> tuple[Solution, float]:
    """Exhaustive constrained optimum; ties resolve to the smallest bit vector."""
    _require_single_leg(inst)
    if inst.n > _MAX_ENUM_N:
        raise ValueError(f"exhaustive search capped at n = {_MAX_ENUM_N}")
    w, p = _enumerate_weights_profits(inst)
    b = _benefit_vector(inst, w, p)
    b = np.where(w <= inst.capacity, b, -np.inf)
    best = int(np.argmax(b))
    sol = Solution.from_bits(inst, _bits_of_index(best, inst.n))
    return sol, float(b[best])


def brute_force_pareto_front(inst: Instance) -> list[Solution]:
    """Exhaustive trade-off front, one representative per objective point.

    Overloaded selections are always dominated by the empty one, so only
    feasible selections are scanned; within a weight class only the best
    benefit survives, and classes must improve on everything lighter.  Ties
    within tolerance at the same weight keep the smallest bit vector.
    """
    _require_single_leg(inst)
    if inst.n > _MAX_PARETO_N:
        raise ValueError(f"exhaustive front capped at n = {_MAX_PARETO_N}")
    w, p = _enumerate_weights_profits(inst)
    b = _benefit_vector(inst, w, p)
    keep = w <= inst.capacity
    idxs = np.nonzero(keep)[0]
    ws, bs = w[keep], b[keep]
    order = np.lexsort((idxs, -bs, ws))
    front: list[int] = []
    last_b: float | None = None
    pos = 0
    while pos < order.size:
        group_w = ws[order[pos]]
        group_b = bs[order[pos]]
        rep = int(idxs[order[pos]])
        pos += 1
        while pos < order.size and ws[order[pos]] == group_w:
            if benefits_close(bs[order[pos]], group_b):
                rep = min(rep, int(idxs[order[pos]]))
            pos += 1
        if last_b is None or (
            group_b > last_b and not benefits_close(group_b, last_b)
        ):
            front.append(rep)
            last_b = group_b
    return [Solution.from_bits(inst, _bits_of_index(i, inst.n)) for i in front]
