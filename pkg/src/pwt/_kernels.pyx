# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled run engine: an operation-for-operation mirror of ``_engine_py``.

Every RNG draw, float expression, acceptance rule, and archive update here
matches the pure-Python engine exactly; results must be bit-identical (the
extension is compiled with fp-contract off to keep float expression order).
Single-leg (two-city) instances only; the engine selector routes multi-leg
runs to the pure engine.
"""

from libc.math cimport fabs
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy, memmove

import numpy as np

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"

ctypedef unsigned long long u64
ctypedef long long i64

cdef double REL_EPS = 1e-9
cdef u64 GOLDEN = <u64>0x9E3779B97F4A7C15

cdef int MUT_RLS_SWAP = 1
cdef int MUT_STD_BIT = 2
cdef int MUT_ONE_BIT = 3


# -- RNG (mirrors rng.SplitMix64) -------------------------------------------

cdef struct Rng:
    u64 state

cdef inline u64 mix64(u64 z) nogil:
    z = (z ^ (z >> 30)) * <u64>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <u64>0x94D049BB133111EB
    return z ^ (z >> 31)

cdef inline u64 rng_u64(Rng* r) nogil:
    r.state = r.state + GOLDEN
    return mix64(r.state)

cdef inline double rng_double(Rng* r) nogil:
    return <double>(rng_u64(r) >> 11) * (1.0 / 9007199254740992.0)

cdef inline long rng_below(Rng* r, long n) nogil:
    return <long>((<u128>rng_u64(r) * <u128>(<u64>n)) >> 64)

cdef inline int rng_bit(Rng* r) nogil:
    return <int>(rng_u64(r) >> 63)

cdef double binom_zero(long n) nogil:
    if n == 1:
        return 0.0
    cdef double q = 1.0 - 1.0 / <double>n
    cdef double p0 = 1.0
    cdef long i
    for i in range(n):
        p0 = p0 * q
    return p0

cdef long flip_count(Rng* r, long n, double p_zero) nogil:
    if n == 1:
        rng_u64(r)
        return 1
    cdef double u = rng_double(r)
    cdef long k = 0
    cdef double pk = p_zero
    cdef double acc = p_zero
    cdef double ratio
    while u > acc and k < n:
        ratio = <double>(n - k) / ((<double>k + 1.0) * (<double>n - 1.0))
        pk = pk * ratio
        acc = acc + pk
        k += 1
    return k


# -- evaluation (mirrors _engine_py helpers) --------------------------------

cdef inline double c_benefit(i64 profit, i64 weight, double d, double R,
                             double v_min, double v_max, double nu,
                             i64 capacity) nogil:
    cdef double vel
    if weight >= capacity:
        vel = v_min
    else:
        vel = v_max - nu * <double>weight
    return <double>profit - R * (d / vel)

cdef inline i64 c_violation(i64 weight, i64 capacity) nogil:
    cdef i64 q = capacity - weight
    return q if q < 0 else 0

cdef inline int c_cmp(i64 q1, double b1, i64 q2, double b2) nogil:
    if q1 != q2:
        return -1 if q1 < q2 else 1
    cdef double m = 1.0
    if fabs(b1) > m:
        m = fabs(b1)
    if fabs(b2) > m:
        m = fabs(b2)
    if fabs(b1 - b2) <= REL_EPS * m:
        return 0
    return -1 if b1 < b2 else 1

cdef inline void rec(list trace, i64 evals, double b, i64 w, long size):
    point = (evals, b, w, size)
    if len(trace) == 0 or <object>trace[len(trace) - 1] != point:
        trace.append(point)

cdef long prefix_protected(unsigned char* bits, i64 weight, long h_cap,
                           const double[::1] rem) nogil:
    cdef long h = 0
    cdef long i
    for i in range(h_cap):
        if bits[i] != 1 or not (<double>weight < rem[i]):
            break
        h = i + 1
    return h


# -- single-objective loop ---------------------------------------------------

cdef inline long flip_tracked(unsigned char[::1] bits, i64[::1] perm,
                              i64[::1] pos, long cnt, long i) nogil:
    cdef long j, k
    cdef i64 other
    if bits[i]:
        bits[i] = 0
        j = <long>pos[i]
        k = cnt - 1
        other = perm[k]
        perm[j] = other
        perm[k] = i
        pos[<long>other] = j
        pos[i] = k
        return k
    bits[i] = 1
    j = <long>pos[i]
    other = perm[cnt]
    perm[j] = other
    perm[cnt] = i
    pos[<long>other] = j
    pos[i] = cnt
    return cnt + 1


def _single(int mutation, const i64[::1] weights, const i64[::1] profits, double d,
            double renting_rate, double v_min, double v_max, double nu,
            i64 capacity, u64 seed, i64 max_evaluations, bint use_target,
            double target_benefit, bint init_zero, bint effective_counting,
            i64 trace_stride, bint track_h, long h_cap, const double[::1] rem_thr):
    cdef long n = weights.shape[0]
    cdef Rng rng
    rng.state = seed
    bits_np = np.zeros(n, dtype=np.uint8)
    perm_np = np.arange(n, dtype=np.int64)
    pos_np = np.arange(n, dtype=np.int64)
    flips_np = np.zeros(n, dtype=np.int64)
    scratch_np = np.arange(n, dtype=np.int64)
    cdef unsigned char[::1] bits = bits_np
    cdef i64[::1] perm = perm_np
    cdef i64[::1] pos = pos_np
    cdef i64[::1] flips = flips_np
    cdef i64[::1] scratch = scratch_np
    cdef long cnt = 0
    cdef i64 w_cur = 0, p_cur = 0
    cdef long i, t, nf, r
    cdef i64 tmp
    if not init_zero:
        for i in range(n):
            if rng_bit(&rng):
                cnt = flip_tracked(bits, perm, pos, cnt, i)
                w_cur += weights[i]
                p_cur += profits[i]
    cdef i64 q_cur = c_violation(w_cur, capacity)
    cdef double b_cur = c_benefit(p_cur, w_cur, d, renting_rate, v_min, v_max,
                                  nu, capacity)

    cdef i64 evaluations = 0
    cdef i64 raw = 0
    cdef bint hit = False
    cdef long h_violations = 0
    cdef long h_prev = -1
    cdef long h
    if track_h and q_cur == 0:
        h_prev = prefix_protected(&bits[0], w_cur, h_cap, rem_thr)
    trace = [(<i64>0, b_cur, w_cur, 1)]
    if use_target and q_cur == 0 and c_cmp(0, b_cur, 0, target_benefit) >= 0:
        hit = True

    cdef double p_zero = binom_zero(n) if mutation == MUT_STD_BIT else 0.0
    cdef i64 dw, dp, w_new, p_new, q_new
    cdef double b_new
    cdef int c

    while not hit and evaluations < max_evaluations:
        raw += 1
        if mutation == MUT_RLS_SWAP:
            if cnt == 0 or cnt == n:
                flips[0] = rng_below(&rng, n)
                nf = 1
            elif rng_double(&rng) < 0.5:
                flips[0] = rng_below(&rng, n)
                nf = 1
            else:
                flips[0] = perm[rng_below(&rng, cnt)]
                flips[1] = perm[cnt + rng_below(&rng, n - cnt)]
                nf = 2
        else:
            nf = flip_count(&rng, n, p_zero)
            for t in range(nf):
                r = t + rng_below(&rng, n - t)
                tmp = scratch[t]
                scratch[t] = scratch[r]
                scratch[r] = tmp
                flips[t] = scratch[t]
        if nf == 0:
            if not effective_counting:
                evaluations += 1
            if raw % trace_stride == 0:
                rec(trace, evaluations, b_cur, w_cur, 1)
            continue
        evaluations += 1
        dw = 0
        dp = 0
        for t in range(nf):
            i = <long>flips[t]
            if bits[i]:
                dw -= weights[i]
                dp -= profits[i]
            else:
                dw += weights[i]
                dp += profits[i]
        w_new = w_cur + dw
        p_new = p_cur + dp
        q_new = c_violation(w_new, capacity)
        b_new = c_benefit(p_new, w_new, d, renting_rate, v_min, v_max, nu, capacity)
        c = c_cmp(q_new, b_new, q_cur, b_cur)
        if c >= 0:
            for t in range(nf):
                cnt = flip_tracked(bits, perm, pos, cnt, <long>flips[t])
            w_cur = w_new
            p_cur = p_new
            q_cur = q_new
            b_cur = b_new
            if track_h and q_cur == 0:
                h = prefix_protected(&bits[0], w_cur, h_cap, rem_thr)
                if 0 <= h_prev and h < h_prev:
                    h_violations += 1
                h_prev = h
            if c > 0:
                rec(trace, evaluations, b_cur, w_cur, 1)
            if use_target and q_cur == 0 and c_cmp(0, b_cur, 0, target_benefit) >= 0:
                hit = True
        if raw % trace_stride == 0:
            rec(trace, evaluations, b_cur, w_cur, 1)
    rec(trace, evaluations, b_cur, w_cur, 1)
    return {
        "bits": bits_np,
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


# -- archive loop -------------------------------------------------------------

cdef struct Bucket:
    i64* w
    long size
    long cap

cdef struct Archive:
    long size
    long cap
    long n
    i64* w
    i64* p
    i64* q
    double* b
    long* card
    long* row
    unsigned char* slab
    long slab_rows
    long next_row
    long* free_rows
    long free_count
    Bucket* buckets
    long* nonempty
    long nonempty_count

cdef inline long lower_bound(i64* a, long size, i64 v) nogil:
    cdef long lo = 0, hi = size, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo

cdef inline long upper_bound(i64* a, long size, i64 v) nogil:
    cdef long lo = 0, hi = size, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] <= v:
            lo = mid + 1
        else:
            hi = mid
    return lo

cdef inline long lower_bound_long(long* a, long size, long v) nogil:
    cdef long lo = 0, hi = size, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo

cdef int arch_init(Archive* A, long n) except -1:
    cdef long cap = 64
    A.size = 0
    A.cap = cap
    A.n = n
    A.w = <i64*>malloc(cap * sizeof(i64))
    A.p = <i64*>malloc(cap * sizeof(i64))
    A.q = <i64*>malloc(cap * sizeof(i64))
    A.b = <double*>malloc(cap * sizeof(double))
    A.card = <long*>malloc(cap * sizeof(long))
    A.row = <long*>malloc(cap * sizeof(long))
    A.slab_rows = cap
    A.slab = <unsigned char*>malloc(cap * n if n > 0 else cap)
    A.next_row = 0
    A.free_rows = <long*>malloc(cap * sizeof(long))
    A.free_count = 0
    A.buckets = <Bucket*>malloc((n + 1) * sizeof(Bucket))
    A.nonempty = <long*>malloc((n + 1) * sizeof(long))
    A.nonempty_count = 0
    if (A.w == NULL or A.p == NULL or A.q == NULL or A.b == NULL or
            A.card == NULL or A.row == NULL or A.slab == NULL or
            A.free_rows == NULL or A.buckets == NULL or A.nonempty == NULL):
        raise MemoryError()
    cdef long i
    for i in range(n + 1):
        A.buckets[i].w = NULL
        A.buckets[i].size = 0
        A.buckets[i].cap = 0
    return 0

cdef void arch_free(Archive* A) nogil:
    cdef long i
    for i in range(A.n + 1):
        if A.buckets[i].w != NULL:
            free(A.buckets[i].w)
    free(A.w)
    free(A.p)
    free(A.q)
    free(A.b)
    free(A.card)
    free(A.row)
    free(A.slab)
    free(A.free_rows)
    free(A.buckets)
    free(A.nonempty)

cdef int arch_grow(Archive* A) except -1:
    cdef long cap = A.cap * 2
    A.w = <i64*>realloc(A.w, cap * sizeof(i64))
    A.p = <i64*>realloc(A.p, cap * sizeof(i64))
    A.q = <i64*>realloc(A.q, cap * sizeof(i64))
    A.b = <double*>realloc(A.b, cap * sizeof(double))
    A.card = <long*>realloc(A.card, cap * sizeof(long))
    A.row = <long*>realloc(A.row, cap * sizeof(long))
    A.free_rows = <long*>realloc(A.free_rows, cap * sizeof(long))
    A.slab = <unsigned char*>realloc(A.slab, cap * A.n if A.n > 0 else cap)
    if (A.w == NULL or A.p == NULL or A.q == NULL or A.b == NULL or
            A.card == NULL or A.row == NULL or A.free_rows == NULL or
            A.slab == NULL):
        raise MemoryError()
    A.cap = cap
    A.slab_rows = cap
    return 0

cdef int bucket_add(Archive* A, long card, i64 w) except -1:
    cdef Bucket* bk = &A.buckets[card]
    cdef long ip, i
    if bk.cap == 0:
        bk.cap = 4
        bk.w = <i64*>malloc(bk.cap * sizeof(i64))
        if bk.w == NULL:
            raise MemoryError()
    elif bk.size == bk.cap:
        bk.cap = bk.cap * 2
        bk.w = <i64*>realloc(bk.w, bk.cap * sizeof(i64))
        if bk.w == NULL:
            raise MemoryError()
    if bk.size == 0:
        i = lower_bound_long(A.nonempty, A.nonempty_count, card)
        memmove(A.nonempty + i + 1, A.nonempty + i,
                (A.nonempty_count - i) * sizeof(long))
        A.nonempty[i] = card
        A.nonempty_count += 1
    ip = lower_bound(bk.w, bk.size, w)
    memmove(bk.w + ip + 1, bk.w + ip, (bk.size - ip) * sizeof(i64))
    bk.w[ip] = w
    bk.size += 1
    return 0

cdef void bucket_remove(Archive* A, long card, i64 w) nogil:
    cdef Bucket* bk = &A.buckets[card]
    cdef long ip = lower_bound(bk.w, bk.size, w)
    memmove(bk.w + ip, bk.w + ip + 1, (bk.size - ip - 1) * sizeof(i64))
    bk.size -= 1
    cdef long i
    if bk.size == 0:
        i = lower_bound_long(A.nonempty, A.nonempty_count, card)
        memmove(A.nonempty + i, A.nonempty + i + 1,
                (A.nonempty_count - i - 1) * sizeof(long))
        A.nonempty_count -= 1

cdef int arch_insert(Archive* A, unsigned char* child, i64 w, i64 p, i64 q,
                     double b, long card) except -1:
    """1 if inserted, 0 if strongly dominated (mirror of _Archive.try_insert)."""
    cdef long r = upper_bound(A.w, A.size, w)
    cdef int c
    if r > 0:
        c = c_cmp(A.q[r - 1], A.b[r - 1], q, b)
        if c > 0 or (c == 0 and A.w[r - 1] < w):
            return 0
    cdef long ip = lower_bound(A.w, A.size, w)
    cdef long z = ip
    while z < A.size and c_cmp(A.q[z], A.b[z], q, b) <= 0:
        bucket_remove(A, A.card[z], A.w[z])
        A.free_rows[A.free_count] = A.row[z]
        A.free_count += 1
        z += 1
    cdef long removed = z - ip
    cdef long tail = A.size - z
    cdef long row
    if removed == 0:
        if A.size == A.cap:
            arch_grow(A)
        memmove(A.w + ip + 1, A.w + ip, tail * sizeof(i64))
        memmove(A.p + ip + 1, A.p + ip, tail * sizeof(i64))
        memmove(A.q + ip + 1, A.q + ip, tail * sizeof(i64))
        memmove(A.b + ip + 1, A.b + ip, tail * sizeof(double))
        memmove(A.card + ip + 1, A.card + ip, tail * sizeof(long))
        memmove(A.row + ip + 1, A.row + ip, tail * sizeof(long))
        A.size += 1
    else:
        memmove(A.w + ip + 1, A.w + z, tail * sizeof(i64))
        memmove(A.p + ip + 1, A.p + z, tail * sizeof(i64))
        memmove(A.q + ip + 1, A.q + z, tail * sizeof(i64))
        memmove(A.b + ip + 1, A.b + z, tail * sizeof(double))
        memmove(A.card + ip + 1, A.card + z, tail * sizeof(long))
        memmove(A.row + ip + 1, A.row + z, tail * sizeof(long))
        A.size -= removed - 1
    if A.free_count > 0:
        A.free_count -= 1
        row = A.free_rows[A.free_count]
    else:
        row = A.next_row
        A.next_row += 1
    A.w[ip] = w
    A.p[ip] = p
    A.q[ip] = q
    A.b[ip] = b
    A.card[ip] = card
    A.row[ip] = row
    if A.n > 0:
        memcpy(A.slab + row * A.n, child, A.n)
    bucket_add(A, card, w)
    return 1


def _archive(int mutation, const i64[::1] weights, const i64[::1] profits, double d,
             double renting_rate, double v_min, double v_max, double nu,
             i64 capacity, u64 seed, i64 max_evaluations, bint use_target,
             double target_benefit, bint init_zero, bint effective_counting,
             i64 trace_stride):
    cdef long n = weights.shape[0]
    cdef Rng rng
    rng.state = seed
    cdef Archive A
    arch_init(&A, n)
    cdef unsigned char* child = <unsigned char*>malloc(n if n > 0 else 1)
    init_np = np.zeros(n, dtype=np.uint8)
    flips_np = np.zeros(n, dtype=np.int64)
    scratch_np = np.arange(n, dtype=np.int64)
    cdef unsigned char[::1] init_bits = init_np
    cdef i64[::1] flips = flips_np
    cdef i64[::1] scratch = scratch_np
    if child == NULL:
        arch_free(&A)
        raise MemoryError()

    cdef i64 w0 = 0, p0 = 0
    cdef long card0 = 0
    cdef long i
    if not init_zero:
        for i in range(n):
            if rng_bit(&rng):
                init_bits[i] = 1
                w0 += weights[i]
                p0 += profits[i]
                card0 += 1
    cdef i64 q0 = c_violation(w0, capacity)
    cdef double b0 = c_benefit(p0, w0, d, renting_rate, v_min, v_max, nu, capacity)

    try:
        for i in range(n):
            child[i] = init_bits[i]
        arch_insert(&A, child, w0, p0, q0, b0, card0)
        return _archive_loop(mutation, &A, &rng, weights, profits, child,
                             flips, scratch, d, renting_rate, v_min, v_max,
                             nu, capacity, max_evaluations, use_target,
                             target_benefit, effective_counting, trace_stride,
                             q0, b0, w0)
    finally:
        free(child)
        arch_free(&A)


cdef dict _archive_loop(int mutation, Archive* Ap, Rng* rngp,
                        const i64[::1] weights, const i64[::1] profits,
                        unsigned char* child, i64[::1] flips, i64[::1] scratch,
                        double d, double renting_rate, double v_min,
                        double v_max, double nu, i64 capacity,
                        i64 max_evaluations, bint use_target,
                        double target_benefit, bint effective_counting,
                        i64 trace_stride, i64 q0, double b0, i64 w0):
    cdef Archive* A = Ap
    cdef Rng* rng = rngp
    cdef long n = weights.shape[0]
    cdef i64 best_q = q0
    cdef double best_b = b0
    cdef i64 best_w = w0

    cdef i64 evaluations = 0
    cdef i64 raw = 0
    cdef bint hit = False
    trace = [(<i64>0, best_b, best_w, 1)]
    if use_target and best_q == 0 and c_cmp(0, best_b, 0, target_benefit) >= 0:
        hit = True

    cdef double p_zero = binom_zero(n) if mutation == MUT_STD_BIT else 0.0
    cdef long i, t, nf, r, j, ei, r1, r2, seen, card_new
    cdef i64 tmp, w_new, p_new, q_new
    cdef double b_new
    cdef unsigned char* pb
    cdef i64 wmax

    while not hit and evaluations < max_evaluations:
        raw += 1
        j = A.nonempty[rng_below(rng, A.nonempty_count)]
        wmax = A.buckets[j].w[A.buckets[j].size - 1]
        ei = lower_bound(A.w, A.size, wmax)
        pb = A.slab + A.row[ei] * A.n
        if mutation == MUT_RLS_SWAP:
            if j == 0 or j == n:
                flips[0] = rng_below(rng, n)
                nf = 1
            elif rng_double(rng) < 0.5:
                flips[0] = rng_below(rng, n)
                nf = 1
            else:
                r1 = rng_below(rng, j)
                r2 = rng_below(rng, n - j)
                seen = 0
                for i in range(n):
                    if pb[i]:
                        if seen == r1:
                            flips[0] = i
                            break
                        seen += 1
                seen = 0
                for i in range(n):
                    if not pb[i]:
                        if seen == r2:
                            flips[1] = i
                            break
                        seen += 1
                nf = 2
        elif mutation == MUT_ONE_BIT:
            flips[0] = rng_below(rng, n)
            nf = 1
        else:
            nf = flip_count(rng, n, p_zero)
            for t in range(nf):
                r = t + rng_below(rng, n - t)
                tmp = scratch[t]
                scratch[t] = scratch[r]
                scratch[r] = tmp
                flips[t] = scratch[t]
        if nf == 0:
            if not effective_counting:
                evaluations += 1
            if raw % trace_stride == 0:
                rec(trace, evaluations, best_b, best_w, A.size)
            continue
        evaluations += 1
        memcpy(child, pb, n)
        w_new = A.w[ei]
        p_new = A.p[ei]
        card_new = A.card[ei]
        for t in range(nf):
            i = <long>flips[t]
            if child[i]:
                child[i] = 0
                w_new -= weights[i]
                p_new -= profits[i]
                card_new -= 1
            else:
                child[i] = 1
                w_new += weights[i]
                p_new += profits[i]
                card_new += 1
        q_new = c_violation(w_new, capacity)
        b_new = c_benefit(p_new, w_new, d, renting_rate, v_min, v_max, nu, capacity)
        if arch_insert(A, child, w_new, p_new, q_new, b_new, card_new):
            if c_cmp(A.q[A.size - 1], A.b[A.size - 1], best_q, best_b) > 0:
                rec(trace, evaluations, A.b[A.size - 1], A.w[A.size - 1], A.size)
            best_q = A.q[A.size - 1]
            best_b = A.b[A.size - 1]
            best_w = A.w[A.size - 1]
            if use_target and best_q == 0 and c_cmp(0, best_b, 0, target_benefit) >= 0:
                hit = True
        if raw % trace_stride == 0:
            rec(trace, evaluations, best_b, best_w, A.size)
    rec(trace, evaluations, best_b, best_w, A.size)

    cdef long bi = A.size - 1
    best_np = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] bb = best_np
    for i in range(n):
        bb[i] = A.slab[A.row[bi] * A.n + i]
    archive = []
    cdef unsigned char[::1] rowv
    for t in range(A.size):
        row_np = np.zeros(n, dtype=np.uint8)
        rowv = row_np
        for i in range(n):
            rowv[i] = A.slab[A.row[t] * A.n + i]
        archive.append((row_np, A.w[t], A.p[t], A.q[t], A.b[t]))
    return {
        "bits": best_np,
        "weight": A.w[bi],
        "profit": A.p[bi],
        "violation": A.q[bi],
        "benefit": A.b[bi],
        "evaluations": evaluations,
        "raw_iterations": raw,
        "hit_target": hit,
        "trace": trace,
        "h_violations": 0,
        "archive": archive,
    }


def run(weights, profits, cities, distances, renting_rate, v_min, v_max, nu,
        capacity, algorithm, seed, max_evaluations, use_target, target_benefit,
        init_zero, effective_counting, trace_stride, track_h, h_cap,
        remove_thresholds):
    """Entry point with the same signature and result dict as _engine_py.run."""
    w_arr = np.ascontiguousarray(weights, dtype=np.int64)
    p_arr = np.ascontiguousarray(profits, dtype=np.int64)
    d_arr = np.ascontiguousarray(distances, dtype=np.float64)
    if d_arr.shape[0] != 1:
        raise ValueError("compiled engine supports single-leg instances only")
    rem = np.ascontiguousarray(remove_thresholds, dtype=np.float64)
    if track_h and rem.shape[0] < h_cap:
        raise ValueError("remove_thresholds shorter than the protected cap")
    cdef int alg = int(algorithm)
    cdef double d0 = float(d_arr[0])
    if alg == 1 or alg == 2:
        return _single(MUT_RLS_SWAP if alg == 1 else MUT_STD_BIT,
                       w_arr, p_arr, d0, float(renting_rate), float(v_min),
                       float(v_max), float(nu), int(capacity), int(seed),
                       int(max_evaluations), bool(use_target),
                       float(target_benefit), bool(init_zero),
                       bool(effective_counting), int(trace_stride),
                       bool(track_h), int(h_cap), rem)
    if alg == 3 or alg == 4 or alg == 5:
        return _archive(MUT_STD_BIT if alg == 3 else
                        (MUT_ONE_BIT if alg == 4 else MUT_RLS_SWAP),
                        w_arr, p_arr, d0, float(renting_rate), float(v_min),
                        float(v_max), float(nu), int(capacity), int(seed),
                        int(max_evaluations), bool(use_target),
                        float(target_benefit), bool(init_zero),
                        bool(effective_counting), int(trace_stride))
    raise ValueError(f"unknown algorithm id {algorithm}")
