"""Exact evaluation for the Packing While Travelling problem.

A vehicle travels a fixed path of ``m`` legs; picking items earns profit but
slows the vehicle, and travel time is rented at a fixed rate.  For the
two-city instances used throughout the experiments (m = 1) the benefit of a
selection ``s`` is

    B(s) = P(s) - R * d / (v_max - nu * W(s)),    nu = (v_max - v_min) / C,

with the velocity clamped at ``v_min`` once the load reaches the capacity so
that overloaded (infeasible) selections still get a finite, order-preserving
benefit.  Constrained comparison is lexicographic on (violation, benefit).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

#: Relative benefit-equality tolerance, falling back to absolute below 1.
REL_EPS = 1e-9

INSTANCE_FORMAT_VERSION = 1


def benefit_tolerance(a: float, b: float = 0.0) -> float:
    return REL_EPS * max(1.0, abs(a), abs(b))


def benefits_close(a: float, b: float) -> bool:
    """True when two benefit values are equal within the shared tolerance."""
    return abs(a - b) <= benefit_tolerance(a, b)


@dataclass(frozen=True)
class Item:
    """A single item: positive integer profit and weight."""

    profit: int
    weight: int
    city: int = 1

    def __post_init__(self):
        if self.profit < 1 or self.weight < 1:
            raise ValueError(f"item profit/weight must be >= 1, got {self}")


class Instance:
    """An immutable problem instance.

    ``profits``/``weights``/``cities`` are parallel int64 arrays indexed by
    item; ``distances`` holds one entry per travel leg (two cities means a
    single leg).  ``nu`` is always derived from the stored velocity bounds
    and capacity, never supplied.
    """

    __slots__ = (
        "profits",
        "weights",
        "cities",
        "distances",
        "renting_rate",
        "v_min",
        "v_max",
        "capacity",
        "nu",
    )

    def __init__(
        self,
        profits: Sequence[int],
        weights: Sequence[int],
        *,
        distances: Sequence[float],
        renting_rate: float,
        v_min: float,
        v_max: float,
        capacity: int,
        cities: Sequence[int] | None = None,
    ):
        profits = np.array(profits, dtype=np.int64)
        weights = np.array(weights, dtype=np.int64)
        if profits.ndim != 1 or profits.shape != weights.shape:
            raise ValueError("profits and weights must be 1-d arrays of equal length")
        if profits.size < 1:
            raise ValueError("an instance needs at least one item")
        if profits.min() < 1 or weights.min() < 1:
            raise ValueError("profits and weights must be positive integers")
        distances = np.array(distances, dtype=np.float64)
        if distances.ndim != 1 or distances.size < 1 or distances.min() <= 0:
            raise ValueError("need at least one positive leg distance")
        if cities is None:
            cities = np.ones(profits.size, dtype=np.int64)
        else:
            cities = np.array(cities, dtype=np.int64)
            if cities.shape != profits.shape:
                raise ValueError("cities must parallel the item arrays")
            if cities.min() < 1 or cities.max() > distances.size:
                raise ValueError("item city indices must lie in 1..m")
        if renting_rate < 0:
            raise ValueError("renting rate must be non-negative")
        if not (0 < v_min < v_max):
            raise ValueError("need 0 < v_min < v_max")
        if capacity < 1:
            raise ValueError("capacity must be a positive integer")
        for arr in (profits, weights, cities, distances):
            arr.flags.writeable = False
        self.profits = profits
        self.weights = weights
        self.cities = cities
        self.distances = distances
        self.renting_rate = float(renting_rate)
        self.v_min = float(v_min)
        self.v_max = float(v_max)
        self.capacity = int(capacity)
        self.nu = (self.v_max - self.v_min) / self.capacity

    @property
    def n(self) -> int:
        return int(self.profits.size)

    @property
    def m(self) -> int:
        """Number of travel legs (two cities <=> m == 1)."""
        return int(self.distances.size)

    @property
    def items(self) -> list[Item]:
        return [
            Item(int(p), int(w), int(c))
            for p, w, c in zip(self.profits, self.weights, self.cities)
        ]

    @property
    def correlated(self) -> bool:
        """Single leg, profits non-increasing and weights non-decreasing."""
        if self.m != 1:
            return False
        p, w = self.profits, self.weights
        return bool(np.all(p[:-1] >= p[1:]) and np.all(w[:-1] <= w[1:]))

    @property
    def strictly_correlated(self) -> bool:
        """As ``correlated`` but with strict profit and weight orderings."""
        if self.m != 1:
            return False
        p, w = self.profits, self.weights
        return bool(np.all(p[:-1] > p[1:]) and np.all(w[:-1] < w[1:]))

    @property
    def uniform(self) -> bool:
        return bool(np.all(self.weights == 1))

    def validate(self):
        """Recompute-and-compare the derived fields; raises on corruption."""
        nu = (self.v_max - self.v_min) / self.capacity
        if nu != self.nu:
            raise ValueError(f"stored nu {self.nu!r} != derived {nu!r}")

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "version": INSTANCE_FORMAT_VERSION,
            "n": self.n,
            "m": self.m,
            "distances": [float(d) for d in self.distances],
            "rentingRate": self.renting_rate,
            "vMin": self.v_min,
            "vMax": self.v_max,
            "capacity": self.capacity,
            "items": [
                {"profit": int(p), "weight": int(w), "city": int(c)}
                for p, w, c in zip(self.profits, self.weights, self.cities)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Instance":
        if data.get("version") != INSTANCE_FORMAT_VERSION:
            raise ValueError(f"unsupported instance format version {data.get('version')!r}")
        items = data["items"]
        if len(items) != data["n"]:
            raise ValueError("item count does not match n")
        if len(data["distances"]) != data["m"]:
            raise ValueError("distance count does not match m")
        inst = cls(
            [it["profit"] for it in items],
            [it["weight"] for it in items],
            cities=[it.get("city", 1) for it in items],
            distances=data["distances"],
            renting_rate=data["rentingRate"],
            v_min=data["vMin"],
            v_max=data["vMax"],
            capacity=data["capacity"],
        )
        return inst

    def save(self, path_or_file: str | IO[str]):
        if hasattr(path_or_file, "write"):
            json.dump(self.to_dict(), path_or_file)
        else:
            with open(path_or_file, "w") as fh:
                json.dump(self.to_dict(), fh)

    @classmethod
    def load(cls, path_or_file: str | IO[str]) -> "Instance":
        if hasattr(path_or_file, "read"):
            return cls.from_dict(json.load(path_or_file))
        with open(path_or_file) as fh:
            return cls.from_dict(json.load(fh))

    def __repr__(self):
        return (
            f"Instance(n={self.n}, m={self.m}, R={self.renting_rate}, "
            f"C={self.capacity}, v=[{self.v_min},{self.v_max}])"
        )


class Solution:
    """A fixed-length bit vector with cached weight/profit aggregates."""

    __slots__ = ("bits", "weight", "profit")

    def __init__(self, bits: np.ndarray, weight: int, profit: int):
        self.bits = bits
        self.weight = int(weight)
        self.profit = int(profit)

    @classmethod
    def from_bits(cls, inst: Instance, bits: Iterable[int]) -> "Solution":
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.shape != (inst.n,):
            raise ValueError(f"bit vector must have length {inst.n}")
        if arr.size and arr.max() > 1:
            raise ValueError("bits must be 0/1")
        w = int(inst.weights[arr == 1].sum())
        p = int(inst.profits[arr == 1].sum())
        return cls(arr, w, p)

    @classmethod
    def zero(cls, inst: Instance) -> "Solution":
        return cls(np.zeros(inst.n, dtype=np.uint8), 0, 0)

    @classmethod
    def prefix(cls, inst: Instance, count: int) -> "Solution":
        """The selection of the first ``count`` items in index order."""
        if not 0 <= count <= inst.n:
            raise ValueError("prefix length out of range")
        bits = np.zeros(inst.n, dtype=np.uint8)
        bits[:count] = 1
        w = int(inst.weights[:count].sum())
        p = int(inst.profits[:count].sum())
        return cls(bits, w, p)

    def flip(self, inst: Instance, index: int) -> "Solution":
        """Return a copy with one bit flipped; caches updated incrementally."""
        bits = self.bits.copy()
        sign = -1 if bits[index] else 1
        bits[index] ^= 1
        return Solution(
            bits,
            self.weight + sign * int(inst.weights[index]),
            self.profit + sign * int(inst.profits[index]),
        )

    def cardinality(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other):
        return isinstance(other, Solution) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash(self.bits.tobytes())

    def __repr__(self):
        return f"Solution(|s|={self.cardinality()}, W={self.weight}, P={self.profit})"


class Fitness(tuple):
    """Constrained fitness: (violation, benefit) under lexicographic order."""

    __slots__ = ()

    def __new__(cls, violation: int, benefit: float):
        return super().__new__(cls, (int(violation), float(benefit)))

    @property
    def violation(self) -> int:
        return self[0]

    @property
    def benefit(self) -> float:
        return self[1]

    @property
    def feasible(self) -> bool:
        return self[0] == 0


class Dominance(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"
    INCOMPARABLE = "incomparable"


def total_weight(inst: Instance, s: Solution) -> int:
    """Sum of selected weights (authoritative rescan of the bit vector)."""
    return int(inst.weights[s.bits == 1].sum())


def total_profit(inst: Instance, s: Solution) -> int:
    return int(inst.profits[s.bits == 1].sum())


def travel_time(inst: Instance, s: Solution) -> float:
    """Load-dependent travel time over all legs.

    Velocity on a leg is ``v_max - nu * carried`` for the weight carried up
    to and including that leg's city, clamped at ``v_min`` once the carried
    weight reaches the capacity (removing the overload singularity).
    """
    if inst.m == 1:
        return _leg_time(inst, s.weight)
    carried = 0
    t = 0.0
    weights = inst.weights
    cities = inst.cities
    bits = s.bits
    for leg in range(1, inst.m + 1):
        carried += int(weights[(cities == leg) & (bits == 1)].sum())
        t += inst.distances[leg - 1] / _velocity(inst, carried)
    return t


def _velocity(inst: Instance, carried: int) -> float:
    if carried >= inst.capacity:
        return inst.v_min
    return inst.v_max - inst.nu * carried


def _leg_time(inst: Instance, carried: int) -> float:
    return float(inst.distances[0]) / _velocity(inst, carried)


def benefit(inst: Instance, s: Solution) -> float:
    """P(s) minus the rented travel time."""
    if inst.m == 1:
        # Single expression, kept identical to the run engines.
        return s.profit - inst.renting_rate * (
            float(inst.distances[0]) / _velocity(inst, s.weight)
        )
    return s.profit - inst.renting_rate * travel_time(inst, s)


def fitness(inst: Instance, s: Solution) -> Fitness:
    return Fitness(min(inst.capacity - s.weight, 0), benefit(inst, s))


def compare_fitness(a: Fitness, b: Fitness) -> int:
    """Lexicographic comparison; returns -1/0/+1 for less/equal/greater.

    Violations compare exactly (integers); benefits compare within the
    shared tolerance band so analytically tied selections order as equal.
    """
    if a[0] != b[0]:
        return -1 if a[0] < b[0] else 1
    if abs(a[1] - b[1]) <= benefit_tolerance(a[1], b[1]):
        return 0
    return -1 if a[1] < b[1] else 1


def dominance(inst: Instance, s1: Solution, s2: Solution) -> Dominance:
    """Bi-objective relation of s1 over s2: minimize weight, maximize fitness."""
    f1, f2 = fitness(inst, s1), fitness(inst, s2)
    cmp = compare_fitness(f1, f2)
    if s1.weight <= s2.weight and cmp >= 0:
        if s1.weight < s2.weight or cmp > 0:
            return Dominance.STRONG
        return Dominance.WEAK
    return Dominance.INCOMPARABLE
