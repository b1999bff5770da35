"""Brute-force oracles, deliberately independent of the package's shortcuts.

* coordinates come from a plain dict over itertools.combinations, not rank_map;
* W_n is spanned by every composite beta * w (no one-step factorisation);
* H_i is read off the Koszul complex
      K_i(V)_n = sum over i-subsets S of [n] of V_{[n] - S},
  whose differential drops one point of S at a time with alternating signs.

Only the exact row reduction is shared with the package.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from oimod.linalg import Subspace, row_reduce


def coords(degrees, n):
    out = {}
    for j, d in enumerate(degrees):
        for a in itertools.combinations(range(1, n + 1), d):
            out[(j, a)] = len(out)
    return out


def brute_relation_space(P, n):
    """Span of all composites beta * w, beta: [deg w] -> [n]."""
    field = P.field
    idx = coords(P.free.generator_degrees, n)
    rows = []
    for w in P.relations:
        if w.degree > n:
            continue
        for beta in itertools.combinations(range(1, n + 1), w.degree):
            v = field.zeros(len(idx))
            for j, a, c in w.terms:
                v[idx[(j, tuple(beta[h - 1] for h in a.values))]] = field(c)
            rows.append(v)
    if not rows:
        return Subspace.zero(field, len(idx))
    return Subspace.span(field, np.vstack(rows), len(idx))


def brute_dim(P, n):
    return len(coords(P.free.generator_degrees, n)) - brute_relation_space(P, n).dim


def brute_lower_span(P, n):
    """W_n plus every image of F_m, m < n, under every map [m] -> [n]."""
    field = P.field
    idx = coords(P.free.generator_degrees, n)
    W = brute_relation_space(P, n)
    hit = set()
    for m in range(n):
        for beta in itertools.combinations(range(1, n + 1), m):
            for j, d in enumerate(P.free.generator_degrees):
                for a in itertools.combinations(range(1, m + 1), d):
                    hit.add(idx[(j, tuple(beta[h - 1] for h in a))])
    return W.join(Subspace.coordinate(field, len(idx), hit))


class KoszulOracle:
    def __init__(self, P):
        self.P = P
        self.field = P.field
        self.degs = P.free.generator_degrees

    @lru_cache(maxsize=None)
    def _W(self, m):
        return brute_relation_space(self.P, m)

    @lru_cache(maxsize=None)
    def face(self, m, q):
        """Matrix of V_m -> V_{m+1} induced by the increasing map missing q."""
        field = self.field
        W0, W1 = self._W(m), self._W(m + 1)
        idx0, idx1 = coords(self.degs, m), coords(self.degs, m + 1)
        labels0 = {v: k for k, v in idx0.items()}
        beta = [h if h < q else h + 1 for h in range(1, m + 1)]
        free0, free1 = W0.free_columns, W1.free_columns
        D = field.zeros((len(free0), len(free1)))
        for r, c in enumerate(free0):
            j, a = labels0[c]
            e = field.zeros(len(idx1))
            e[idx1[(j, tuple(beta[h - 1] for h in a))]] = field(1)
            D[r] = W1.quotient_coords(e)
        return D

    def dim_v(self, m):
        return len(self._W(m).free_columns)

    def differential(self, i, n):
        """d_i: K_i(V)_n -> K_{i-1}(V)_n as a matrix (rows = source basis)."""
        field = self.field
        src = list(itertools.combinations(range(1, n + 1), i))
        tgt = {S: k for k, S in enumerate(itertools.combinations(range(1, n + 1), i - 1))}
        a, b = self.dim_v(n - i), self.dim_v(n - i + 1)
        D = field.zeros((len(src) * a, len(tgt) * b))
        for si, S in enumerate(src):
            for t, s in enumerate(S):
                rest = S[:t] + S[t + 1:]
                # position of s inside [n] - rest
                q = s - sum(1 for x in rest if x < s)
                block = self.face(n - i, q)
                sign = 1 if t % 2 == 0 else -1
                ti = tgt[rest]
                piece = block if sign == 1 else (-block) % field.p if field.is_prime else -block
                D[si * a:(si + 1) * a, ti * b:(ti + 1) * b] += piece
                if field.is_prime:
                    D[si * a:(si + 1) * a, ti * b:(ti + 1) * b] %= field.p
        return D

    def rank(self, i, n):
        if i <= 0 or i > n:
            return 0
        D = self.differential(i, n)
        if D.size == 0:
            return 0
        return len(row_reduce(self.field, D)[1])

    def h(self, i, n):
        if i > n:
            return 0
        size = len(list(itertools.combinations(range(n), i))) * self.dim_v(n - i)
        return size - self.rank(i, n) - self.rank(i + 1, n)

    def check_square_zero(self, i, n):
        from oimod.linalg import matmul

        if i < 2 or i > n:
            return True
        prod = matmul(self.field, self.differential(i, n), self.differential(i - 1, n))
        return not np.any(prod != 0)
