"""Pure-Python run engine: the behavioural reference for the compiled twin.

The compiled kernel in ``_kernels.pyx`` mirrors this module operation for
operation: identical RNG draw order, identical floating-point expression
order, identical acceptance and archive updates.  Any run must produce a
bit-identical result on both engines, which is enforced by tests, so every
change here is a change to the run semantics and must be ported.

The compiled twin covers the single-leg (two-city) case only; multi-leg
instances always run here, with per-leg travel times recomputed the same
way ``core.travel_time`` does.

Layout notes shared by both engines:

* Single-objective state keeps a permutation of item indices whose first
  ``cnt`` slots are the one-bits, giving O(1) uniform one-bit / zero-bit
  picks for the swap mutation.
* The archive is kept sorted by weight.  Mutual non-domination makes the
  stored fitnesses strictly increase with weight (a staircase), so the
  benefit-maximal member of a cardinality bucket is simply its heaviest
  member, dominance checks reduce to one binary search, and evictions are
  one contiguous run starting at the insertion point.
* Archive weights are unique (equal-weight entries can never coexist), so
  cardinality buckets store plain weight values.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort

import numpy as np

from .core import REL_EPS
from .rng import SplitMix64, binomial_zero_term, standard_mutation_flip_count

MUT_RLS_SWAP = 1
MUT_STD_BIT = 2
MUT_ONE_BIT = 3

ALG_RLS_SWAP = 1
ALG_OPO_EA = 2
ALG_GSEMO = 3
ALG_SEMO = 4
ALG_SEMO_SWAP = 5

_SINGLE_MUTATION = {ALG_RLS_SWAP: MUT_RLS_SWAP, ALG_OPO_EA: MUT_STD_BIT}
_ARCHIVE_MUTATION = {
    ALG_GSEMO: MUT_STD_BIT,
    ALG_SEMO: MUT_ONE_BIT,
    ALG_SEMO_SWAP: MUT_RLS_SWAP,
}


def run(
    weights,
    profits,
    cities,
    distances,
    renting_rate,
    v_min,
    v_max,
    nu,
    capacity,
    algorithm,
    seed,
    max_evaluations,
    use_target,
    target_benefit,
    init_zero,
    effective_counting,
    trace_stride,
    track_h,
    h_cap,
    remove_thresholds,
):
    args = (
        np.asarray(weights, dtype=np.int64),
        np.asarray(profits, dtype=np.int64),
        np.asarray(cities, dtype=np.int64),
        np.asarray(distances, dtype=np.float64),
        float(renting_rate),
        float(v_min),
        float(v_max),
        float(nu),
        int(capacity),
        int(seed),
        int(max_evaluations),
        bool(use_target),
        float(target_benefit),
        bool(init_zero),
        bool(effective_counting),
        int(trace_stride),
        bool(track_h),
        int(h_cap),
        remove_thresholds,
    )
    if algorithm in _SINGLE_MUTATION:
        return _single_run(_SINGLE_MUTATION[algorithm], *args)
    if algorithm in _ARCHIVE_MUTATION:
        return _archive_run(_ARCHIVE_MUTATION[algorithm], *args)
    raise ValueError(f"unknown algorithm id {algorithm}")


def _benefit(profit, weight, d, renting_rate, v_min, v_max, nu, capacity):
    if weight >= capacity:
        vel = v_min
    else:
        vel = v_max - nu * weight
    return profit - renting_rate * (d / vel)


def _legs_benefit(profit, leg_w, distances, renting_rate, v_min, v_max, nu, capacity):
    # Mirrors core.travel_time leg by leg so values match bit for bit.
    t = 0.0
    carried = 0
    for leg in range(distances.size):
        carried += int(leg_w[leg])
        if carried >= capacity:
            vel = v_min
        else:
            vel = v_max - nu * carried
        t += distances[leg] / vel
    return profit - renting_rate * t


def _violation(weight, capacity):
    q = capacity - weight
    return q if q < 0 else 0


def _cmp(q1, b1, q2, b2):
    if q1 != q2:
        return -1 if q1 < q2 else 1
    tol = REL_EPS * max(1.0, abs(b1), abs(b2))
    if abs(b1 - b2) <= tol:
        return 0
    return -1 if b1 < b2 else 1


def _record(trace, evaluations, benefit, weight, size):
    point = (evaluations, benefit, weight, size)
    if not trace or trace[-1] != point:
        trace.append(point)


def _prefix_protected(bits, weight, h_cap, remove_thresholds):
    h = 0
    for i in range(h_cap):
        if bits[i] != 1 or not (weight < remove_thresholds[i]):
            break
        h = i + 1
    return h


# -- single-objective loop (RLS_swap, (1+1) EA) -----------------------------


def _flip_tracked(bits, perm, pos, cnt, i):
    """Flip bit i keeping the one-bits in perm[:cnt]; returns the new cnt."""
    if bits[i]:
        bits[i] = 0
        j = pos[i]
        k = cnt - 1
        other = perm[k]
        perm[j], perm[k] = other, i
        pos[other], pos[i] = j, k
        return k
    bits[i] = 1
    j = pos[i]
    other = perm[cnt]
    perm[j], perm[cnt] = other, i
    pos[other], pos[i] = j, cnt
    return cnt + 1


def _single_run(
    mutation,
    weights,
    profits,
    cities,
    distances,
    renting_rate,
    v_min,
    v_max,
    nu,
    capacity,
    seed,
    max_evaluations,
    use_target,
    target_benefit,
    init_zero,
    effective_counting,
    trace_stride,
    track_h,
    h_cap,
    remove_thresholds,
):
    n = int(weights.size)
    m = int(distances.size)
    d = float(distances[0])
    rng = SplitMix64(seed)
    bits = np.zeros(n, dtype=np.uint8)
    perm = np.arange(n, dtype=np.int64)
    pos = np.arange(n, dtype=np.int64)
    cnt = 0
    w_cur = 0
    p_cur = 0
    if not init_zero:
        for i in range(n):
            if rng.next_bit():
                cnt = _flip_tracked(bits, perm, pos, cnt, i)
                w_cur += int(weights[i])
                p_cur += int(profits[i])
    q_cur = _violation(w_cur, capacity)
    if m == 1:
        leg_w = None
        b_cur = _benefit(p_cur, w_cur, d, renting_rate, v_min, v_max, nu, capacity)
    else:
        leg_w = np.zeros(m, dtype=np.int64)
        for i in range(n):
            if bits[i]:
                leg_w[cities[i] - 1] += weights[i]
        b_cur = _legs_benefit(
            p_cur, leg_w, distances, renting_rate, v_min, v_max, nu, capacity
        )

    evaluations = 0
    raw = 0
    hit = False
    h_violations = 0
    h_prev = -1
    if track_h and q_cur == 0:
        h_prev = _prefix_protected(bits, w_cur, h_cap, remove_thresholds)
    trace = [(0, b_cur, w_cur, 1)]
    if use_target and q_cur == 0 and _cmp(0, b_cur, 0, target_benefit) >= 0:
        hit = True

    p_zero = binomial_zero_term(n) if mutation == MUT_STD_BIT else 0.0
    scratch = np.arange(n, dtype=np.int64)
    flips = np.zeros(n, dtype=np.int64)

    while not hit and evaluations < max_evaluations:
        raw += 1
        if mutation == MUT_RLS_SWAP:
            # The coin is drawn only when both bit kinds exist.
            if cnt == 0 or cnt == n or rng.next_double() < 0.5:
                flips[0] = rng.below(n)
                nf = 1
            else:
                flips[0] = perm[rng.below(cnt)]
                flips[1] = perm[cnt + rng.below(n - cnt)]
                nf = 2
        else:
            nf = standard_mutation_flip_count(rng, n, p_zero)
            for t in range(nf):
                r = t + rng.below(n - t)
                scratch[t], scratch[r] = scratch[r], scratch[t]
                flips[t] = scratch[t]
        if nf == 0:
            if not effective_counting:
                evaluations += 1
            if raw % trace_stride == 0:
                _record(trace, evaluations, b_cur, w_cur, 1)
            continue
        evaluations += 1
        dw = 0
        dp = 0
        for t in range(nf):
            i = int(flips[t])
            if bits[i]:
                dw -= int(weights[i])
                dp -= int(profits[i])
            else:
                dw += int(weights[i])
                dp += int(profits[i])
        w_new = w_cur + dw
        p_new = p_cur + dp
        q_new = _violation(w_new, capacity)
        if m == 1:
            leg_scratch = None
            b_new = _benefit(p_new, w_new, d, renting_rate, v_min, v_max, nu, capacity)
        else:
            leg_scratch = leg_w.copy()
            for t in range(nf):
                i = int(flips[t])
                if bits[i]:
                    leg_scratch[cities[i] - 1] -= weights[i]
                else:
                    leg_scratch[cities[i] - 1] += weights[i]
            b_new = _legs_benefit(
                p_new, leg_scratch, distances, renting_rate, v_min, v_max, nu, capacity
            )
        c = _cmp(q_new, b_new, q_cur, b_cur)
        if c >= 0:
            for t in range(nf):
                cnt = _flip_tracked(bits, perm, pos, cnt, int(flips[t]))
            w_cur, p_cur, q_cur, b_cur = w_new, p_new, q_new, b_new
            if m > 1:
                leg_w = leg_scratch
            if track_h and q_cur == 0:
                h = _prefix_protected(bits, w_cur, h_cap, remove_thresholds)
                if 0 <= h_prev and h < h_prev:
                    h_violations += 1
                h_prev = h
            if c > 0:
                _record(trace, evaluations, b_cur, w_cur, 1)
            if use_target and q_cur == 0 and _cmp(0, b_cur, 0, target_benefit) >= 0:
                hit = True
        if raw % trace_stride == 0:
            _record(trace, evaluations, b_cur, w_cur, 1)
    _record(trace, evaluations, b_cur, w_cur, 1)
    return {
        "bits": bits,
        "weight": w_cur,
        "profit": p_cur,
        "violation": q_cur,
        "benefit": b_cur,
        "evaluations": evaluations,
        "raw_iterations": raw,
        "hit_target": hit,
        "trace": trace,
        "h_violations": h_violations,
        "archive": None,
    }


# -- archive loop (GSEMO, SEMO, SEMO_swap) ----------------------------------


class _Archive:
    """Weight-sorted non-dominated store with cardinality buckets."""

    def __init__(self):
        self.w = []
        self.p = []
        self.q = []
        self.b = []
        self.card = []
        self.bits = []
        self.buckets = {}
        self.nonempty = []

    def _bucket_add(self, card, w):
        lst = self.buckets.get(card)
        if not lst:
            self.buckets[card] = lst = []
            insort(self.nonempty, card)
        insort(lst, w)

    def _bucket_remove(self, card, w):
        lst = self.buckets[card]
        del lst[bisect_left(lst, w)]
        if not lst:
            del self.nonempty[bisect_left(self.nonempty, card)]

    def heaviest_of_bucket(self, card):
        """Index of the bucket's benefit-maximal member.

        The fitness staircase makes that the heaviest member; distinct
        members can never tie in fitness, so the nominal tie-break (lower
        weight, then smaller bit vector) can never fire.
        """
        return bisect_left(self.w, self.buckets[card][-1])

    def try_insert(self, bits, w, p, q, b, card):
        """Insert unless strongly dominated; evict what the newcomer covers."""
        r = bisect_right(self.w, w)
        if r > 0:
            c = _cmp(self.q[r - 1], self.b[r - 1], q, b)
            if c > 0 or (c == 0 and self.w[r - 1] < w):
                return False
        ip = bisect_left(self.w, w)
        z = ip
        while z < len(self.w) and _cmp(self.q[z], self.b[z], q, b) <= 0:
            self._bucket_remove(self.card[z], self.w[z])
            z += 1
        del self.w[ip:z], self.p[ip:z], self.q[ip:z], self.b[ip:z]
        del self.card[ip:z], self.bits[ip:z]
        self.w.insert(ip, w)
        self.p.insert(ip, p)
        self.q.insert(ip, q)
        self.b.insert(ip, b)
        self.card.insert(ip, card)
        self.bits.insert(ip, bits)
        self._bucket_add(card, w)
        return True

    def __len__(self):
        return len(self.w)


def _archive_run(
    mutation,
    weights,
    profits,
    cities,
    distances,
    renting_rate,
    v_min,
    v_max,
    nu,
    capacity,
    seed,
    max_evaluations,
    use_target,
    target_benefit,
    init_zero,
    effective_counting,
    trace_stride,
    track_h,
    h_cap,
    remove_thresholds,
):
    n = int(weights.size)
    m = int(distances.size)
    d = float(distances[0])
    rng = SplitMix64(seed)
    bits = np.zeros(n, dtype=np.uint8)
    w0 = 0
    p0 = 0
    card0 = 0
    if not init_zero:
        for i in range(n):
            if rng.next_bit():
                bits[i] = 1
                w0 += int(weights[i])
                p0 += int(profits[i])
                card0 += 1
    q0 = _violation(w0, capacity)
    leg_scratch = np.zeros(m, dtype=np.int64)

    def eval_bits(child, profit, weight):
        if m == 1:
            return _benefit(profit, weight, d, renting_rate, v_min, v_max, nu, capacity)
        leg_scratch[:] = 0
        for i in range(n):
            if child[i]:
                leg_scratch[cities[i] - 1] += weights[i]
        return _legs_benefit(
            profit, leg_scratch, distances, renting_rate, v_min, v_max, nu, capacity
        )

    b0 = eval_bits(bits, p0, w0)

    arch = _Archive()
    arch.try_insert(bits, w0, p0, q0, b0, card0)
    best_q, best_b, best_w = q0, b0, w0

    evaluations = 0
    raw = 0
    hit = False
    trace = [(0, best_b, best_w, 1)]
    if use_target and best_q == 0 and _cmp(0, best_b, 0, target_benefit) >= 0:
        hit = True

    p_zero = binomial_zero_term(n) if mutation == MUT_STD_BIT else 0.0
    scratch = np.arange(n, dtype=np.int64)
    flips = np.zeros(n, dtype=np.int64)

    while not hit and evaluations < max_evaluations:
        raw += 1
        j = arch.nonempty[rng.below(len(arch.nonempty))]
        ei = arch.heaviest_of_bucket(j)
        parent_bits = arch.bits[ei]
        parent_w = arch.w[ei]
        parent_p = arch.p[ei]
        if mutation == MUT_RLS_SWAP:
            if j == 0 or j == n or rng.next_double() < 0.5:
                flips[0] = rng.below(n)
                nf = 1
            else:
                r1 = rng.below(j)
                r2 = rng.below(n - j)
                flips[0] = np.flatnonzero(parent_bits)[r1]
                flips[1] = np.flatnonzero(parent_bits == 0)[r2]
                nf = 2
        elif mutation == MUT_ONE_BIT:
            flips[0] = rng.below(n)
            nf = 1
        else:
            nf = standard_mutation_flip_count(rng, n, p_zero)
            for t in range(nf):
                r = t + rng.below(n - t)
                scratch[t], scratch[r] = scratch[r], scratch[t]
                flips[t] = scratch[t]
        if nf == 0:
            if not effective_counting:
                evaluations += 1
            if raw % trace_stride == 0:
                _record(trace, evaluations, best_b, best_w, len(arch))
            continue
        evaluations += 1
        child = parent_bits.copy()
        w_new = parent_w
        p_new = parent_p
        card_new = int(arch.card[ei])
        for t in range(nf):
            i = int(flips[t])
            if child[i]:
                child[i] = 0
                w_new -= int(weights[i])
                p_new -= int(profits[i])
                card_new -= 1
            else:
                child[i] = 1
                w_new += int(weights[i])
                p_new += int(profits[i])
                card_new += 1
        q_new = _violation(w_new, capacity)
        b_new = eval_bits(child, p_new, w_new)
        if arch.try_insert(child, w_new, p_new, q_new, b_new, card_new):
            tq, tb, tw = arch.q[-1], arch.b[-1], arch.w[-1]
            if _cmp(tq, tb, best_q, best_b) > 0:
                _record(trace, evaluations, tb, tw, len(arch))
            best_q, best_b, best_w = tq, tb, tw
            if use_target and best_q == 0 and _cmp(0, best_b, 0, target_benefit) >= 0:
                hit = True
        if raw % trace_stride == 0:
            _record(trace, evaluations, best_b, best_w, len(arch))
    _record(trace, evaluations, best_b, best_w, len(arch))
    bi = len(arch) - 1
    return {
        "bits": arch.bits[bi].copy(),
        "weight": arch.w[bi],
        "profit": arch.p[bi],
        "violation": arch.q[bi],
        "benefit": arch.b[bi],
        "evaluations": evaluations,
        "raw_iterations": raw,
        "hit_target": hit,
        "trace": trace,
        "h_violations": 0,
        "archive": [
            (arch.bits[t].copy(), arch.w[t], arch.p[t], arch.q[t], arch.b[t])
            for t in range(len(arch))
        ],
    }
