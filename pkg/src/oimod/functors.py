"""Shift functor, the maps V -> Sigma V, and the quotient V-bar of the r-fold shift.

Shifting a free module splits it: Sigma^r M(m) is the direct sum over
subsets E of [r] with |E| <= m of M(m - |E|), the summand for E sending
alpha to alpha_E (see ``combinatorics.embed_prefix``).  Presentation-level
shifts re-coordinatize degreewise bases of W along this splitting.

For V with d = t0(V), the summands with E empty on top-degree generators
form P; killing everything generated below degree d in Sigma^r V leaves
V-bar = P / W-hat, where W-hat is the projection of Sigma^r W onto P.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .combinatorics import (
    IncreasingMap,
    check_degree,
    compose,
    decompose_shifted,
    enumerate_maps,
    hat,
    iota,
    sigma_lift,
    subsets_by_size,
)
from .homology import kernel_h0_dims, prd, t0
from .linalg import Subspace
from .module import (
    Element,
    FreeModule,
    Presentation,
    basis_labels,
    block_offsets,
    cofaces,
    dim_at,
    free_dim,
    image_coordinates,
    relation_space,
    vector_element,
)
from .combinatorics import map_index


class ZeroModuleError(ValueError):
    pass


class HypothesisError(ValueError):
    """A certified check was asked to run outside its hypotheses."""


@dataclass(frozen=True)
class ShiftedDecomposition:
    r: int
    summand_index: tuple[tuple[int, tuple[int, ...]], ...]
    new_generator_degrees: tuple[int, ...]

    def index_of(self, j: int, E: tuple[int, ...]) -> int:
        return self.summand_index.index((j, E))


def shifted_decomposition(F: FreeModule, r: int) -> ShiftedDecomposition:
    if r < 0:
        raise ValueError("shift must be non-negative")
    index = tuple((j, E) for j, d in enumerate(F.generator_degrees) for E in subsets_by_size(r, d))
    degs = tuple(F.generator_degrees[j] - len(E) for j, E in index)
    return ShiftedDecomposition(r, index, degs)


def shift_presentation(P: Presentation, r: int) -> tuple[Presentation, ShiftedDecomposition]:
    """A presentation of Sigma^r V over the split free module.

    Sigma^r W is generated in degrees <= t0(W) <= top relation degree, so
    full bases of W_{m+r} for those m give its relations.
    """
    dec = shifted_decomposition(P.free, r)
    lookup = {key: k for k, key in enumerate(dec.summand_index)}
    field = P.field
    new_free = FreeModule(dec.new_generator_degrees)
    relations = []
    for m in range(P.max_relation_degree + 1):
        check_degree(m + r)
        W = relation_space(P, m + r)
        if W.dim == 0:
            continue
        labels = basis_labels(P.free, m + r)
        for row in W.basis:
            terms = []
            for c in np.flatnonzero(row != 0):
                j, gamma = labels[c]
                E, res = decompose_shifted(gamma, r)
                terms.append((lookup[(j, E)], res, row[c]))
            relations.append(Element.build(field, m, terms, new_free))
    return Presentation(field, new_free, tuple(relations)), dec


def shift_eval_dim(P: Presentation, r: int, n: int) -> int:
    return dim_at(P, n + r)


def _iota_rank(P: Presentation, n: int) -> int:
    """Rank of V_n -> V_{n+1}, v -> iota v."""
    W1 = relation_space(P, n + 1)
    dim1 = free_dim(P.free, n + 1)
    img = Subspace.coordinate(P.field, dim1, image_coordinates(P.free, n, n + 1, [iota(n)]))
    return W1.join(img).dim - W1.dim


def kappa_dim(P: Presentation, n: int) -> int:
    return dim_at(P, n) - _iota_rank(P, n)


def delta_dim(P: Presentation, n: int) -> int:
    return dim_at(P, n + 1) - _iota_rank(P, n)


def delta_h0_dim(P: Presentation, n: int) -> int:
    """dim H_0(Delta V)_n, computed inside F_{n+1}.

    (Delta V)_n = V_{n+1} / iota V_n, and maps into degree n act through
    sigma_lift, so the quotient is F_{n+1} modulo W_{n+1}, iota F_n and
    sigma_lift(beta) F_n for every beta: [n-1] -> [n].
    """
    F = P.free
    dim1 = free_dim(F, n + 1)
    maps = [iota(n)]
    if n >= 1:
        maps.extend(sigma_lift(b) for b in cofaces(n))
    coords = image_coordinates(F, n, n + 1, maps)
    span = relation_space(P, n + 1).join(Subspace.coordinate(P.field, dim1, coords))
    return dim1 - span.dim


@dataclass(frozen=True)
class VBarData:
    """Top-degree data and W-hat generators for V-bar = P / W-hat.

    ``search_bound`` is t0(W): the degrees s of W scanned for generators.
    The w-hat elements generate W-hat only when r >= prd.
    """

    d: int
    r: int
    top_generators: tuple[int, ...]
    what_generators: tuple[Element, ...]
    search_bound: int = -1

    @property
    def free(self) -> FreeModule:
        return FreeModule((self.d,) * len(self.top_generators))


def _top_data(P: Presentation) -> tuple[int, tuple[int, ...]]:
    d = t0(P)
    if d < 0:
        raise ZeroModuleError("V-bar is undefined for the zero module")
    if P.free.max_degree > d:
        raise ValueError(
            f"presentation has generators in degree {P.free.max_degree} above t0 = {d}; "
            "drop the redundant generators first"
        )
    return d, tuple(j for j, dj in enumerate(P.free.generator_degrees) if dj == d)


def what_generators(P: Presentation, r: int) -> VBarData:
    """Generators w-hat_l of W-hat, one batch per basis vector w of W_s, s <= t0(W).

    For l = 1..s-d+1, w-hat_l collects the top-generator terms of w whose
    map starts at l, each map shifted so that it starts at 1; it lives in
    degree s - l + 1.
    """
    d, I = _top_data(P)
    pos = {j: k for k, j in enumerate(I)}
    G = FreeModule((d,) * len(I))
    field = P.field
    s_top = kernel_h0_dims(P).degree
    gens = []
    for s in range(d, s_top + 1):
        W = relation_space(P, s)
        if W.dim == 0:
            continue
        labels = basis_labels(P.free, s)
        for row in W.basis:
            by_start: dict[int, list] = {}
            for c in np.flatnonzero(row != 0):
                j, alpha = labels[c]
                if j not in pos:
                    continue
                if d == 0:
                    # the empty map survives every projection, so it feeds every l
                    for ell in range(1, s + 2):
                        by_start.setdefault(ell, []).append((pos[j], IncreasingMap(s - ell + 1, ()), row[c]))
                    continue
                ell, ahat = hat(alpha)
                by_start.setdefault(ell, []).append((pos[j], ahat, row[c]))
            for ell in range(1, s - d + 2):
                terms = by_start.get(ell)
                if terms:
                    gens.append(Element.build(field, s - ell + 1, terms, G))
    return VBarData(d, r, I, tuple(gens), s_top)


def vbar_presentation(P: Presentation, r: int) -> Presentation:
    """V-bar = P / W-hat.

    For r >= prd the w-hat elements generate W-hat.  Below that the formula
    no longer applies, so W-hat is taken straight from the projection
    eta(Sigma^r W), which is generated in degrees <= t0(W).
    """
    if r >= prd(P):
        data = what_generators(P, r)
        return Presentation(P.field, data.free, data.what_generators)
    return projected_vbar_presentation(P, r)


def projected_vbar_presentation(P: Presentation, r: int) -> Presentation:
    d, I = _top_data(P)
    G = FreeModule((d,) * len(I))
    rels = []
    for n in range(kernel_h0_dims(P).degree + 1):
        check_degree(n + r)
        for row in projected_shift_relations(P, r, n).basis:
            rels.append(vector_element(G, row, n, P.field))
    return Presentation(P.field, G, tuple(rels))


def projected_shift_relations(P: Presentation, r: int, n: int) -> Subspace:
    """W-hat_n = eta(W_{n+r}): keep top-generator terms whose map avoids [r], shifted down by r."""
    d, I = _top_data(P)
    pos = {j: k for k, j in enumerate(I)}
    G = FreeModule((d,) * len(I))
    field = P.field
    dim = free_dim(G, n)
    W = relation_space(P, n + r)
    if W.dim == 0 or dim == 0:
        return Subspace.zero(field, dim)
    labels = basis_labels(P.free, n + r)
    off = block_offsets(G, n)
    rows = field.zeros((W.dim, dim))
    for i, row in enumerate(W.basis):
        for c in np.flatnonzero(row != 0):
            j, gamma = labels[c]
            if j not in pos:
                continue
            E, res = decompose_shifted(gamma, r)
            if not E:
                rows[i, off[pos[j]] + map_index(res)] = row[c]
    return Subspace.span(field, rows, dim)


def generated_span(G: FreeModule, elements, n: int, field) -> Subspace:
    """Span of beta * e for every listed element e and every beta: [deg e] -> [n]."""
    dim = free_dim(G, n)
    off = block_offsets(G, n)
    rows = []
    for e in elements:
        if e.degree > n:
            continue
        for beta in enumerate_maps(e.degree, n):
            v = field.zeros(dim)
            for j, a, c in e.terms:
                v[off[j] + map_index(compose(beta, a))] = c
            rows.append(v)
    if not rows:
        return Subspace.zero(field, dim)
    return Subspace.span(field, np.vstack(rows), dim)


@dataclass(frozen=True)
class Certificate:
    check: str
    params: dict
    window: int
    passed: bool
    first_failure: int | None = None
    exploratory: bool = False
    details: dict = dc_field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "params": dict(self.params),
            "window": self.window,
            "pass": self.passed,
            "first_failure": self.first_failure,
        }
        if self.exploratory:
            out["exploratory"] = "hypothesis unmet"
        return out


def check_kappa_vbar(P: Presentation, r: int, window: int, force: bool = False) -> Certificate:
    """Check that V-bar -> Sigma V-bar is injective in degrees 0..window."""
    if window < 1:
        raise ValueError("window must be at least 1")
    p = prd(P)
    exploratory = r < p
    if exploratory and not force:
        raise HypothesisError(f"r = {r} is below the presentation degree {p}")
    vbar = vbar_presentation(P, r)
    kappas = [kappa_dim(vbar, n) for n in range(window + 1)]
    bad = next((n for n, k in enumerate(kappas) if k), None)
    return Certificate(
        "kappa-vbar-vanishes",
        {"r": r, "prd": p},
        window,
        bad is None,
        bad,
        exploratory,
        {"kappa": kappas},
    )


def verify_what_span(P: Presentation, r: int, window: int) -> Certificate:
    """Compare the submodule generated by the w-hat elements with eta(Sigma^r W), degree by degree.

    Runs for any r; below prd the result is marked exploratory.
    """
    data = what_generators(P, r)
    p = prd(P)
    G = data.free
    bad = None
    dims = []
    for n in range(window + 1):
        check_degree(n + r)
        lhs = generated_span(G, data.what_generators, n, P.field)
        rhs = projected_shift_relations(P, r, n)
        dims.append(rhs.dim)
        if lhs != rhs and bad is None:
            bad = n
    return Certificate("what-span-equality", {"r": r, "prd": p}, window, bad is None, bad, r < p, {"dims": dims})
