"""Counter-based 64-bit randomness used by every stochastic component.

The generator is SplitMix64 (Steele/Lea/Flood mixing constants): the state is
a counter advanced by the golden-ratio increment and each output is the
finalizer hash of the new state.  It is trivially reproducible across
languages, which is why the compiled kernel re-implements it word for word.

Stream-split rule (documented contract, relied on by the harness):

    child = mix64(((parent ^ mix64(word)) + GOLDEN) mod 2**64)

applied left to right over the words; string words are first hashed with
FNV-1a 64.  A run r of an experiment uses
``seed_chain(base_seed, instance_index, algorithm_id, r)``.

Bounded integers use the multiply-shift reduction ``(x * n) >> 64``; for the
range sizes used here (n <= 10**7) the bias is below 2**-40 and irrelevant.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit hash."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fnv1a64(text: str) -> int:
    """FNV-1a 64-bit hash of a UTF-8 string (used for named stream words)."""
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) & MASK64
    return h


def seed_chain(seed: int, *words: int | str) -> int:
    """Derive a child seed from ``seed`` and a sequence of stream words."""
    x = seed & MASK64
    for w in words:
        word = fnv1a64(w) if isinstance(w, str) else int(w) & MASK64
        x = mix64(((x ^ mix64(word)) + GOLDEN) & MASK64)
    return x


class SplitMix64:
    """The shared PRNG; state advances by GOLDEN, output is mix64(state)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_double(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via multiply-shift reduction."""
        return (self.next_u64() * n) >> 64

    def next_bit(self) -> int:
        return self.next_u64() >> 63


def standard_mutation_flip_count(rng: SplitMix64, n: int, p_zero: float) -> int:
    """Draw the number of flipped bits of a standard 1/n bit mutation.

    Inversion sampling of Binomial(n, 1/n); ``p_zero`` must be the
    precomputed (1 - 1/n)**n obtained via :func:`binomial_zero_term` so the
    float arithmetic matches the compiled kernel exactly.
    """
    if n == 1:
        rng.next_u64()  # keep the stream aligned with the general case
        return 1
    u = rng.next_double()
    k = 0
    pk = p_zero
    acc = p_zero
    while u > acc and k < n:
        ratio = (n - k) / ((k + 1.0) * (n - 1.0))
        pk = pk * ratio
        acc = acc + pk
        k += 1
    return k


def binomial_zero_term(n: int) -> float:
    """(1 - 1/n)**n by repeated multiplication (kernel-identical rounding)."""
    if n == 1:
        return 0.0
    q = 1.0 - 1.0 / n
    p0 = 1.0
    for _ in range(n):
        p0 *= q
    return p0
