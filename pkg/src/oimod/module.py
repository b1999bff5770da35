"""Finitely presented OI-modules V = F / W and their degreewise evaluation.

F is a free module, a direct sum of M(d_j); the coordinates of F_n are the
pairs (j, alpha) with alpha: [d_j] -> [n], in generator block order and
lexicographic order of alpha inside each block.  W is the submodule
generated by the listed homogeneous relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import accumulate

import numpy as np

from .combinatorics import (
    IncreasingMap,
    binomial,
    check_degree,
    compose,
    enumerate_maps,
    map_index,
)
from .linalg import QQ, Field, Subspace


@dataclass(frozen=True)
class FreeModule:
    """F = M(d_0) + M(d_1) + ... in the given order."""

    generator_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        degs = tuple(int(d) for d in self.generator_degrees)
        if any(d < 0 for d in degs):
            raise ValueError(f"generator degrees must be non-negative: {degs}")
        object.__setattr__(self, "generator_degrees", degs)

    def __len__(self):
        return len(self.generator_degrees)

    def __iter__(self):
        return iter(self.generator_degrees)

    @property
    def max_degree(self) -> int:
        return max(self.generator_degrees, default=-1)


def free_dim(F: FreeModule, n: int) -> int:
    check_degree(n)
    return sum(binomial(n, d) for d in F.generator_degrees)


@lru_cache(maxsize=None)
def block_offsets(F: FreeModule, n: int) -> tuple[int, ...]:
    """Start of each generator block inside F_n (plus the total at the end)."""
    return (0,) + tuple(accumulate(binomial(n, d) for d in F.generator_degrees))


def coordinate(F: FreeModule, j: int, alpha: IncreasingMap) -> int:
    return block_offsets(F, alpha.target)[j] + map_index(alpha)


def basis_labels(F: FreeModule, n: int) -> list[tuple[int, IncreasingMap]]:
    """The (generator, map) pair behind every coordinate of F_n, in order."""
    return [(j, a) for j, d in enumerate(F.generator_degrees) for a in enumerate_maps(d, n)]


@dataclass(frozen=True)
class Element:
    """A homogeneous element sum c * (j, alpha) of F_degree.

    Use :meth:`build` to get the normalized form (merged duplicate pairs,
    no zero coefficients, terms sorted by coordinate).
    """

    degree: int
    terms: tuple[tuple[int, IncreasingMap, object], ...] = ()

    @classmethod
    def build(cls, field: Field, degree: int, terms, F: FreeModule | None = None) -> "Element":
        acc: dict[tuple[int, tuple[int, ...]], object] = {}
        maps = {}
        for j, alpha, c in terms:
            if not isinstance(alpha, IncreasingMap):
                alpha = IncreasingMap(degree, tuple(alpha))
            if alpha.target != degree:
                raise ValueError(f"term map {alpha.values} lands in [{alpha.target}], element degree is {degree}")
            if F is not None:
                if not 0 <= j < len(F):
                    raise ValueError(f"generator index {j} out of range")
                if alpha.source != F.generator_degrees[j]:
                    raise ValueError(
                        f"term map {alpha.values} has source [{alpha.source}], "
                        f"generator {j} has degree {F.generator_degrees[j]}"
                    )
            key = (j, alpha.values)
            maps[key] = alpha
            acc[key] = acc.get(key, field(0)) + field(c)
        if field.is_prime:
            acc = {k: v % field.p for k, v in acc.items()}
        out = sorted(
            ((j, maps[(j, v)], c) for (j, v), c in acc.items() if c != 0),
            key=lambda t: (t[0], map_index(t[1])),
        )
        return cls(degree, tuple(out))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class Presentation:
    """V = F / W where W is generated by the homogeneous ``relations``.

    ``valid_through`` is set on presentations whose relation list is only
    known to be complete up to some degree (syzygy truncations); None
    means the list is exact.
    """

    field: Field
    free: FreeModule
    relations: tuple[Element, ...] = ()
    valid_through: int | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.free, FreeModule):
            object.__setattr__(self, "free", FreeModule(tuple(self.free)))
        object.__setattr__(self, "relations", tuple(self.relations))
        for w in self.relations:
            if w.degree < 0:
                raise ValueError("relation degrees must be non-negative")
            for j, a, _ in w.terms:
                if not 0 <= j < len(self.free) or a.source != self.free.generator_degrees[j]:
                    raise ValueError(f"relation term ({j}, {a.values}) does not match the free module")
                if a.target != w.degree:
                    raise ValueError("relation is not homogeneous")

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash((self.field, self.free, self.relations))
            object.__setattr__(self, "_hash", h)
            return h

    @property
    def max_relation_degree(self) -> int:
        return max((w.degree for w in self.relations), default=-1)

    @property
    def min_relation_degree(self) -> int | None:
        return min((w.degree for w in self.relations), default=None)


def zero_presentation(field: Field = QQ) -> Presentation:
    return Presentation(field, FreeModule(()), ())


def free_presentation(degrees, field: Field = QQ) -> Presentation:
    return Presentation(field, FreeModule(tuple(degrees)), ())


def element_vector(F: FreeModule, e: Element, field: Field) -> np.ndarray:
    v = field.zeros(free_dim(F, e.degree))
    off = block_offsets(F, e.degree)
    for j, a, c in e.terms:
        v[off[j] + map_index(a)] = field(c)
    return v


def vector_element(F: FreeModule, v, n: int, field: Field) -> Element:
    labels = basis_labels(F, n)
    if len(v) != len(labels):
        raise ValueError(f"vector of length {len(v)} does not live in F_{n} (dim {len(labels)})")
    terms = [(j, a, c) for (j, a), c in zip(labels, v) if c != 0]
    return Element.build(field, n, terms)


def act(beta: IncreasingMap, e: Element, field: Field | None = None) -> Element:
    """The image of e under beta: each term (j, alpha, c) becomes (j, beta alpha, c)."""
    if beta.source != e.degree:
        raise ValueError(f"map out of [{beta.source}] cannot act on an element of degree {e.degree}")
    # beta is injective on maps, so no terms collide and no renormalisation is needed
    terms = sorted(
        ((j, compose(beta, a), c) for j, a, c in e.terms),
        key=lambda t: (t[0], map_index(t[1])),
    )
    return Element(beta.target, tuple(terms))


@lru_cache(maxsize=None)
def push_index(F: FreeModule, beta: IncreasingMap) -> np.ndarray:
    """Coordinate map F_m -> F_n induced by beta (injective on basis vectors)."""
    n = beta.target
    off = block_offsets(F, n)
    idx = [
        off[j] + map_index(compose(beta, a))
        for j, d in enumerate(F.generator_degrees)
        for a in enumerate_maps(d, beta.source)
    ]
    out = np.array(idx, dtype=np.int64)
    out.flags.writeable = False
    return out


def push_rows(F: FreeModule, beta: IncreasingMap, A: np.ndarray, field: Field) -> np.ndarray:
    """Apply beta to each row of A (rows are vectors in F_{beta.source})."""
    out = field.zeros((A.shape[0], free_dim(F, beta.target)))
    if A.shape[0]:
        out[:, push_index(F, beta)] = A
    return out


@lru_cache(maxsize=None)
def cofaces(n: int) -> tuple[IncreasingMap, ...]:
    """The n maps [n-1] -> [n], each missing one point."""
    return enumerate_maps(n - 1, n)


@lru_cache(maxsize=4096)
def relation_space(P: Presentation, n: int) -> Subspace:
    """W_n as a subspace of F_n coordinates.

    Every map [s] -> [n] with s < n factors through some map [n-1] -> [n],
    so W_n is spanned by the relations of degree n together with the
    images of W_{n-1} under the n cofaces.
    """
    check_degree(n)
    field, F = P.field, P.free
    dim = free_dim(F, n)
    lo = P.min_relation_degree
    if lo is None or n < lo:
        return Subspace.zero(field, dim)
    rows = [element_vector(F, w, field) for w in P.relations if w.degree == n]
    if n > lo:
        prev = relation_space(P, n - 1)
        if prev.dim:
            rows.extend(push_rows(F, b, prev.basis, field) for b in cofaces(n))
    if not rows:
        return Subspace.zero(field, dim)
    return Subspace.span(field, np.vstack([np.atleast_2d(r) for r in rows]), dim)


def dim_at(P: Presentation, n: int) -> int:
    return free_dim(P.free, n) - relation_space(P, n).dim


def hilbert(P: Presentation, n0: int, n1: int) -> list[int]:
    if n0 > n1:
        raise ValueError(f"empty window [{n0}, {n1}]")
    return [dim_at(P, n) for n in range(n0, n1 + 1)]


@dataclass(frozen=True)
class Evaluation:
    degree: int
    free_dim: int
    relation_subspace: Subspace

    @property
    def dim(self) -> int:
        return self.free_dim - self.relation_subspace.dim


def evaluate(P: Presentation, n: int) -> Evaluation:
    return Evaluation(n, free_dim(P.free, n), relation_space(P, n))


def image_coordinates(F: FreeModule, m: int, n: int, maps=None) -> list[int]:
    """Coordinates of F_n hit by F_m under the given maps [m] -> [n] (default: all)."""
    maps = enumerate_maps(m, n) if maps is None else maps
    hit: set[int] = set()
    for b in maps:
        hit.update(push_index(F, b).tolist())
    return sorted(hit)


@lru_cache(maxsize=4096)
def lower_image(F: FreeModule, n: int, field: Field) -> Subspace:
    """U^F_n: the span of all images of F_{n-1} under maps [n-1] -> [n]."""
    dim = free_dim(F, n)
    if n == 0:
        return Subspace.zero(field, dim)
    # images of basis vectors are basis vectors, so the span is a coordinate subspace
    return Subspace.coordinate(field, dim, image_coordinates(F, n - 1, n, cofaces(n)))


@lru_cache(maxsize=4096)
def trailing_image(P: Presentation, n: int) -> Subspace:
    """W_n + U^F_n inside F_n; its codimension is dim H_0(V)_n.

    At n = 0 there are no maps from lower degrees and W_0 is returned.
    """
    W = relation_space(P, n)
    if n == 0:
        return W
    return W.join(lower_image(P.free, n, P.field))


def submodule_below_dim(P: Presentation, d: int, n: int) -> int:
    """dim (V_{<d})_n, the submodule generated by all V_m with m < d, at degree n."""
    if d <= 0:
        return 0
    if n < d:
        return dim_at(P, n)
    F, field = P.free, P.field
    W = relation_space(P, n)
    coords = image_coordinates(F, d - 1, n)
    span = W.join(Subspace.coordinate(field, free_dim(F, n), coords))
    return span.dim - W.dim


def direct_sum(P1: Presentation, P2: Presentation) -> Presentation:
    if P1.field != P2.field:
        raise ValueError(f"field mismatch: {P1.field} vs {P2.field}")
    shift = len(P1.free)
    moved = tuple(Element(w.degree, tuple((j + shift, a, c) for j, a, c in w.terms)) for w in P2.relations)
    return Presentation(
        P1.field,
        FreeModule(P1.free.generator_degrees + P2.free.generator_degrees),
        P1.relations + moved,
    )


def induced(n: int, multiplicity: int = 1, field: Field = QQ) -> Presentation:
    """M(n) repeated ``multiplicity`` times; OB has trivial automorphisms so this is all of induction."""
    if multiplicity < 0:
        raise ValueError("multiplicity must be non-negative")
    return free_presentation((n,) * multiplicity, field)
