"""Seeded, portable random instances.

The generator is SplitMix64, fixed so that implementations in other
languages can reproduce the same instance streams:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z <- ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

An integer in [lo, hi] is ``lo + output mod (hi - lo + 1)``.  A random
configuration draws its N points one after another, each point's n
coordinates in order, and is redrawn whole when the resulting matrix is not
of full rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .configuration import PointConfiguration
from .errors import GenerationError
from .linalg import Matrix, rank

MASK = (1 << 64) - 1
MAX_REJECTIONS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.randint(0, len(seq) - 1)]

    def nonzero(self, bound: int) -> int:
        v = self.randint(-bound, bound - 1)
        return v if v < 0 else v + 1


@dataclass(frozen=True)
class RandomConfigSpec:
    n: int
    N: int
    coordinate_bound: int
    seed: int
    count: int = 1

    def __post_init__(self):
        if self.N < self.n + 1:
            raise ValueError(f"N = {self.N} points cannot span dimension {self.n}")
        if self.coordinate_bound < 0:
            raise ValueError("coordinate bound must be non-negative")


def draw_configuration(rng: SplitMix64, n: int, N: int, bound: int) -> PointConfiguration:
    """One full-rank configuration with integer coordinates in [-bound, bound]."""
    for _ in range(MAX_REJECTIONS):
        pts = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(N)]
        M = Matrix.from_rows([[1] * N] + [[p[i] for p in pts] for i in range(n)], N)
        if rank(M) == n + 1:
            return PointConfiguration(M)
    raise GenerationError(f"{MAX_REJECTIONS} consecutive rank-deficient draws "
                          f"(n={n}, N={N}, bound={bound})")


def random_configurations(spec: RandomConfigSpec) -> Iterator[PointConfiguration]:
    rng = SplitMix64(spec.seed)
    for _ in range(spec.count):
        yield draw_configuration(rng, spec.n, spec.N, spec.coordinate_bound)


def random_configuration(spec: RandomConfigSpec) -> list[PointConfiguration]:
    return list(random_configurations(spec))
