"""OI-homology of presented modules: H_0, H_1, windowed H_i and semi-induced checks.

For V = F / W the long exact sequence of 0 -> W -> F -> V -> 0, together
with H_i(F) = 0 for i >= 1, gives

    H_1(V) = ker(H_0(W) -> H_0(F)),      H_i(V) = H_{i-1}(W) for i >= 2,

which is how every higher group is computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .combinatorics import enumerate_maps
from .linalg import Matrix, Subspace, intersect_dim, kernel_basis
from .module import (
    FreeModule,
    Presentation,
    cofaces,
    free_dim,
    lower_image,
    push_rows,
    relation_space,
    trailing_image,
    vector_element,
)


class NotSemiInducedError(ValueError):
    pass


class InsufficientBoundError(ValueError):
    def __init__(self, level: int, needed: int, bound: int):
        super().__init__(
            f"syzygy level {level} has relations up to degree {needed}, above the bound {bound}"
        )
        self.level = level
        self.needed = needed
        self.bound = bound


@dataclass(frozen=True)
class HomologyTable:
    """Nonzero dimensions of H_i(V) by degree, complete for degrees <= certified_through."""

    i: int
    dims: dict[int, int] = dc_field(default_factory=dict)
    certified_through: int = -1

    @property
    def degree(self) -> int:
        return max(self.dims, default=-1)

    def __getitem__(self, n: int) -> int:
        return self.dims.get(n, 0)

    def is_empty(self) -> bool:
        return not self.dims

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "dims": {str(n): d for n, d in sorted(self.dims.items())},
            "certified_through": self.certified_through,
        }


def _table(i: int, values: dict[int, int], through: int) -> HomologyTable:
    return HomologyTable(i, {n: d for n, d in sorted(values.items()) if d}, through)


@lru_cache(maxsize=4096)
def relation_lower_image(P: Presentation, n: int) -> Subspace:
    """U^W_n: images of W_{n-1} under all maps [n-1] -> [n]."""
    dim = free_dim(P.free, n)
    if n == 0:
        return Subspace.zero(P.field, dim)
    prev = relation_space(P, n - 1)
    if prev.dim == 0:
        return Subspace.zero(P.field, dim)
    rows = np.vstack([push_rows(P.free, b, prev.basis, P.field) for b in cofaces(n)])
    return Subspace.span(P.field, rows, dim)


def h0_dims(P: Presentation) -> HomologyTable:
    top = P.free.max_degree
    vals = {n: free_dim(P.free, n) - trailing_image(P, n).dim for n in range(top + 1)}
    return _table(0, vals, top)


def kernel_h0_dims(P: Presentation, through: int | None = None) -> HomologyTable:
    """H_0(W) for the relation module W; W is generated by the listed relations."""
    top = P.max_relation_degree if through is None else through
    vals = {n: relation_space(P, n).dim - relation_lower_image(P, n).dim for n in range(top + 1)}
    return _table(0, vals, top)


def h1_dims(P: Presentation) -> HomologyTable:
    """dim H_1(V)_n = dim(W_n ∩ U^F_n) - dim U^W_n for n up to the top relation degree."""
    top = P.max_relation_degree
    vals = {}
    for n in range(top + 1):
        W = relation_space(P, n)
        vals[n] = intersect_dim(W, lower_image(P.free, n, P.field)) - relation_lower_image(P, n).dim
    through = top if P.valid_through is None else P.valid_through
    return _table(1, vals, through)


def t0(P: Presentation) -> int:
    return h0_dims(P).degree


def t1(P: Presentation) -> int:
    return h1_dims(P).degree


def prd(P: Presentation) -> int:
    return max(t0(P), t1(P))


def _complement_lifts(space: Subspace, sub: Subspace) -> list[np.ndarray]:
    """Rows of ``space``'s RREF basis, reduced, that extend ``sub`` to ``space``."""
    chosen = []
    S = sub
    for row in space.basis:
        red = S.reduce(row)
        if np.any(red != 0):
            chosen.append(red)
            S = S.add_vectors([red])
        if S.dim == space.dim:
            break
    return chosen


def minimal_generators(P: Presentation) -> list[tuple[int, np.ndarray]]:
    """Degree-tagged vectors in W whose images minimally generate W (one per H_0(W) basis element)."""
    out = []
    for s in range(P.max_relation_degree + 1):
        W = relation_space(P, s)
        if W.dim == 0:
            continue
        for v in _complement_lifts(W, relation_lower_image(P, s)):
            out.append((s, v))
    return out


def _cover_matrix(P: Presentation, gens: list[tuple[int, np.ndarray]], n: int) -> np.ndarray:
    """Rows: images in F_n of the basis (k, alpha) of the cover, alpha: [s_k] -> [n]."""
    field = P.field
    blocks = []
    for s, g in gens:
        maps = enumerate_maps(s, n)
        if maps:
            blocks.append(np.vstack([push_rows(P.free, a, g[None, :], field) for a in maps]))
    if not blocks:
        return field.zeros((0, free_dim(P.free, n)))
    return np.vstack(blocks)


def syzygy_presentation(P: Presentation, bound: int, level: int = 1) -> Presentation:
    """A presentation of W = ker(F -> V), exact in all degrees <= bound.

    Generators lift a basis of H_0(W); relations are minimal generators of
    the kernel of the induced cover, searched degreewise up to ``bound``.
    """
    if bound < P.max_relation_degree:
        raise InsufficientBoundError(level, P.max_relation_degree, bound)
    field = P.field
    gens = minimal_generators(P)
    G = FreeModule(tuple(s for s, _ in gens))
    relations = []
    prev = None
    for n in range(bound + 1):
        dim = free_dim(G, n)
        K = kernel_basis(Matrix(field, _cover_matrix(P, gens, n).T.copy()))
        if prev is not None and prev.dim:
            lower = Subspace.span(field, np.vstack([push_rows(G, b, prev.basis, field) for b in cofaces(n)]), dim)
        else:
            lower = Subspace.zero(field, dim)
        if K.dim > lower.dim:
            relations.extend(vector_element(G, v, n, field) for v in _complement_lifts(K, lower))
        prev = K
    return Presentation(field, G, tuple(relations), valid_through=bound)


def h_dims(P: Presentation, i: int, bound: int) -> HomologyTable:
    """H_i(V) in degrees <= bound, through i-fold syzygies; never claimed complete beyond bound."""
    if i < 0:
        raise ValueError("homological index must be non-negative")
    Q = P
    for level in range(1, i):
        Q = syzygy_presentation(Q, bound, level)
    if i == 0:
        tab = h0_dims(Q)
    else:
        if Q.max_relation_degree > bound:
            raise InsufficientBoundError(i - 1, Q.max_relation_degree, bound)
        tab = h1_dims(Q)
    return HomologyTable(i, {n: d for n, d in tab.dims.items() if n <= bound}, bound)


@dataclass(frozen=True)
class SemiInducedCertificate:
    verdict: bool
    h1_table: HomologyTable
    witness_degree: int | None = None

    def to_dict(self) -> dict:
        return {
            "semi_induced": self.verdict,
            "h1": self.h1_table.to_dict(),
            "witness_degree": self.witness_degree,
        }


def is_semi_induced(P: Presentation) -> SemiInducedCertificate:
    """Semi-induced iff H_1 vanishes; H_1 is zero above the top relation degree, so this is complete."""
    tab = h1_dims(P)
    if tab.is_empty():
        return SemiInducedCertificate(True, tab, None)
    return SemiInducedCertificate(False, tab, min(tab.dims))


def filtration_multiplicities(P: Presentation) -> dict[int, int]:
    """Multiplicity of M(m) in the successive quotients of V_{<m+1} / V_{<m}.

    Each quotient is induced from its value in degree m, which is H_0(V)_m.
    """
    cert = is_semi_induced(P)
    if not cert.verdict:
        raise NotSemiInducedError(f"H_1 is nonzero in degree {cert.witness_degree}")
    return dict(h0_dims(P).dims)
