"""Morphisms of OI: strictly increasing maps [m] -> [n].

Maps are stored as value sequences (1-based, as in the usual notation
for [n] = {1, ..., n}).  Lexicographic order of the value sequences is the
basis order used for every coordinate computation in the package.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb

DEFAULT_DEGREE_CAP = 64

_degree_cap = int(os.environ.get("OI_DEGREE_CAP", DEFAULT_DEGREE_CAP))


class DegreeCapError(ValueError):
    """Raised when a computation would enumerate maps into [n] with n above the cap."""


def get_degree_cap() -> int:
    return _degree_cap


def set_degree_cap(cap: int) -> None:
    global _degree_cap
    if cap < 0:
        raise ValueError(f"degree cap must be non-negative, got {cap}")
    _degree_cap = int(cap)


def check_degree(n: int) -> None:
    if n > _degree_cap:
        raise DegreeCapError(f"degree {n} exceeds degree cap {_degree_cap}")


@dataclass(frozen=True, slots=True)
class IncreasingMap:
    """A strictly increasing map [source] -> [target], source = len(values)."""

    target: int
    values: tuple[int, ...] = ()

    def __post_init__(self):
        vals = self.values
        if not isinstance(vals, tuple):
            object.__setattr__(self, "values", vals := tuple(vals))
        if self.target < 0:
            raise ValueError(f"negative target {self.target}")
        prev = 0
        for v in vals:
            if v <= prev or v > self.target:
                raise ValueError(f"{vals} is not an increasing map into [{self.target}]")
            prev = v

    @property
    def source(self) -> int:
        return len(self.values)

    def __call__(self, h: int) -> int:
        return self.values[h - 1]

    def __repr__(self):
        return f"IncreasingMap({self.values}: [{self.source}]->[{self.target}])"


def identity(n: int) -> IncreasingMap:
    return IncreasingMap(n, tuple(range(1, n + 1)))


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _maps(m: int, n: int) -> tuple[IncreasingMap, ...]:
    return tuple(IncreasingMap(n, c) for c in itertools.combinations(range(1, n + 1), m))


def enumerate_maps(m: int, n: int) -> tuple[IncreasingMap, ...]:
    """All increasing maps [m] -> [n] in lexicographic order of values."""
    check_degree(n)
    return _maps(m, n)


@lru_cache(maxsize=None)
def _rank_table(m: int, n: int) -> dict[tuple[int, ...], int]:
    return {a.values: i for i, a in enumerate(_maps(m, n))}


def rank_map(alpha: IncreasingMap) -> int:
    """Position of ``alpha`` in ``enumerate_maps(alpha.source, alpha.target)``."""
    m, n = alpha.source, alpha.target
    # combinatorial rank: count the subsets that agree on a prefix and then
    # take a smaller value at the first differing position
    rank = 0
    prev = 0
    for h, v in enumerate(alpha.values, start=1):
        for u in range(prev + 1, v):
            rank += comb(n - u, m - h)
        prev = v
    return rank


def unrank_map(m: int, n: int, index: int) -> IncreasingMap:
    total = comb(n, m) if m <= n else 0
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range for maps [{m}]->[{n}] ({total} maps)")
    values = []
    u = 1
    for h in range(1, m + 1):
        while True:
            block = comb(n - u, m - h)
            if index < block:
                break
            index -= block
            u += 1
        values.append(u)
        u += 1
    return IncreasingMap(n, tuple(values))


def map_index(alpha: IncreasingMap) -> int:
    """Cached table lookup equivalent to :func:`rank_map`; used on hot paths."""
    return _rank_table(alpha.source, alpha.target)[alpha.values]


def compose(beta: IncreasingMap, alpha: IncreasingMap) -> IncreasingMap:
    """The composite beta o alpha."""
    if alpha.target != beta.source:
        raise ValueError(
            f"cannot compose: alpha lands in [{alpha.target}], beta starts at [{beta.source}]"
        )
    bv = beta.values
    return IncreasingMap(beta.target, tuple(bv[h - 1] for h in alpha.values))


def iota(n: int) -> IncreasingMap:
    """The map [n] -> [n+1], h -> h+1."""
    return IncreasingMap(n + 1, tuple(range(2, n + 2)))


def sigma_lift(alpha: IncreasingMap) -> IncreasingMap:
    """The self-embedding of OI on morphisms: 1 -> 1 and h -> alpha(h-1)+1."""
    return IncreasingMap(alpha.target + 1, (1,) + tuple(v + 1 for v in alpha.values))


def embed_prefix(alpha: IncreasingMap, E, r: int) -> IncreasingMap:
    """alpha_E: send the first |E| points onto E (inside [r]), the rest to alpha + r."""
    E = tuple(sorted(E))
    if any(e < 1 or e > r for e in E) or len(set(E)) != len(E):
        raise ValueError(f"{E} is not a subset of [{r}]")
    return IncreasingMap(alpha.target + r, E + tuple(v + r for v in alpha.values))


def hat(alpha: IncreasingMap) -> tuple[int, IncreasingMap]:
    """Return (l, alpha_hat) with l = alpha(1) and alpha_hat(h) = alpha(h) - l + 1."""
    if alpha.source == 0:
        raise ValueError("hat is undefined on the empty map")
    ell = alpha.values[0]
    return ell, IncreasingMap(alpha.target - ell + 1, tuple(v - ell + 1 for v in alpha.values))


def decompose_shifted(gamma: IncreasingMap, r: int) -> tuple[tuple[int, ...], IncreasingMap]:
    """Inverse of :func:`embed_prefix`: split gamma into (E, residual).

    E collects the values of gamma that land in [r]; the residual records the
    remaining values shifted down by r.
    """
    if gamma.target < r:
        raise ValueError(f"map into [{gamma.target}] cannot be split at r={r}")
    E = tuple(v for v in gamma.values if v <= r)
    rest = tuple(v - r for v in gamma.values[len(E):])
    return E, IncreasingMap(gamma.target - r, rest)


@lru_cache(maxsize=None)
def subsets_by_size(r: int, max_size: int) -> tuple[tuple[int, ...], ...]:
    """Subsets of [r] with at most ``max_size`` elements, ordered by size then lexicographically."""
    out = []
    for size in range(min(r, max_size) + 1):
        out.extend(itertools.combinations(range(1, r + 1), size))
    return tuple(out)
