"""Deterministic random presentations shared by the property and acceptance tests."""

from __future__ import annotations

import random

from oimod.combinatorics import IncreasingMap
from oimod.homology import t0
from oimod.linalg import GF, QQ
from oimod.module import Element, FreeModule, Presentation


def random_map(rng, m, n):
    return IncreasingMap(n, tuple(sorted(rng.sample(range(1, n + 1), m))))


def random_element(rng, field, F, degree, max_terms=3):
    eligible = [j for j, d in enumerate(F.generator_degrees) if d <= degree]
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        j = rng.choice(eligible)
        c = rng.choice([1, 1, -1, 2, -2, 3]) if not field.is_prime else rng.randint(1, field.p - 1)
        terms.append((j, random_map(rng, F.generator_degrees[j], degree), c))
    return Element.build(field, degree, terms, F)


def random_presentation(rng, field, max_gen_degree=2, max_gens=3, max_rel_degree=3, max_rels=3):
    ngen = rng.randint(1, max_gens)
    degs = tuple(sorted(rng.randint(0, max_gen_degree) for _ in range(ngen)))
    F = FreeModule(degs)
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        s = rng.randint(min(degs), max_rel_degree)
        w = random_element(rng, field, F, s)
        if not w.is_zero():
            rels.append(w)
    return Presentation(field, F, tuple(rels))


def shift_corpus(count=50, seed=20261019):
    """Presentations with t0 <= 2, relations in degree <= 3, no generator above t0, over Q and F_5."""
    rng = random.Random(seed)
    out = []
    fields = [QQ, GF(5)]
    while len(out) < count:
        field = fields[len(out) % 2]
        P = random_presentation(rng, field)
        d = t0(P)
        if d < 0 or P.free.max_degree > d:
            continue
        out.append(P)
    return out


def general_corpus(count=100, seed=7):
    """Unfiltered presentations: generators up to degree 2, relations up to degree 4."""
    rng = random.Random(seed)
    fields = [QQ, GF(5), GF(7)]
    return [
        random_presentation(rng, fields[k % 3], max_gen_degree=2, max_gens=2, max_rel_degree=4, max_rels=3)
        for k in range(count)
    ]
