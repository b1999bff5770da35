"""Row reduction kernels.

The prime-field kernel has two interchangeable implementations: a numba
``@njit`` loop and a vectorised pure-numpy version.  Set ``OIMOD_NUMBA=0``
to force the numpy path (numba is also skipped when it is not importable).
The rational kernel works on Python integers and always runs in numpy
object arrays.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd, lcm

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_env = os.environ.get("OIMOD_NUMBA", "1").strip().lower()
USE_NUMBA = HAVE_NUMBA and _env not in ("0", "false", "no", "off")


def _modinv(a, p):
    # extended Euclid; a is a nonzero residue
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


if HAVE_NUMBA:
    _modinv_nb = njit(cache=True)(_modinv)

    @njit(cache=True)
    def _rref_modp_nb(A, p):
        rows, cols = A.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(c, cols):
                    tmp = A[r, k]
                    A[r, k] = A[piv, k]
                    A[piv, k] = tmp
            inv = _modinv_nb(A[r, c], p)
            if inv != 1:
                for k in range(c, cols):
                    A[r, k] = (A[r, k] * inv) % p
            for i in range(rows):
                if i == r:
                    continue
                f = A[i, c]
                if f != 0:
                    for k in range(c, cols):
                        A[i, k] = (A[i, k] - f * A[r, k]) % p
            pivots[r] = c
            r += 1
        return r, pivots


def rref_modp_numpy(A: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        if inv != 1:
            A[r] = (A[r] * inv) % p
        f = A[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            A[hit] = (A[hit] - np.outer(f[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r].copy(), np.array(pivots, dtype=np.int64)


def rref_modp_numba(A: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not available")
    A = np.ascontiguousarray(np.array(A, dtype=np.int64) % p)
    if A.shape[0] == 0 or A.shape[1] == 0:
        return A[:0].copy(), np.zeros(0, dtype=np.int64)
    r, piv = _rref_modp_nb(A, np.int64(p))
    return A[:r].copy(), piv[:r].copy()


def rref_modp(A: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form over F_p: (nonzero rows, pivot columns)."""
    if USE_NUMBA:
        return rref_modp_numba(A, p)
    return rref_modp_numpy(A, p)


def _primitive_int_row(row: list) -> list[int] | None:
    nz = [(k, x) for k, x in enumerate(row) if x]
    if not nz:
        return None
    den = lcm(*(x.denominator for _, x in nz))
    ints = [0] * len(row)
    g = 0
    for k, x in nz:
        v = x.numerator * (den // x.denominator)
        ints[k] = v
        g = gcd(g, v)
    if g != 1:
        ints = [v // g for v in ints]
    return ints


def rref_rational(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form over Q: (nonzero rows as Fractions, pivot columns).

    Elimination is fraction-free on primitive integer rows; division by the
    pivot happens once at the end.
    """
    rows_in, cols = A.shape
    ints = [r for r in (_primitive_int_row(row) for row in A.tolist()) if r is not None]
    if not ints:
        return np.empty((0, cols), dtype=object), np.zeros(0, dtype=np.int64)
    M = np.array(ints, dtype=object).reshape(len(ints), cols)
    pivots = []
    r = 0
    for c in range(cols):
        if r == M.shape[0]:
            break
        col = M[r:, c]
        nz = np.flatnonzero(col != 0)
        if nz.size == 0:
            continue
        # smallest pivot keeps coefficient growth down
        piv = r + int(nz[np.argmin(np.abs(col[nz]))]) if nz.size > 1 else r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        a = M[r, c]
        f = M[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f != 0)
        if hit.size:
            fh = f[hit]
            g = np.gcd(fh, a)
            sub = M[hit] * (a // g)[:, None] - np.outer(fh // g, M[r])
            gg = np.gcd.reduce(sub, axis=1)
            keep = gg != 0
            gg[~keep] = 1
            M[hit] = sub // gg[:, None]
            if not keep.all():
                dead = hit[~keep]
                # earlier pivot rows keep their pivot entry, so only rows below r die
                M = np.delete(M, dead, axis=0)
        pivots.append(c)
        r += 1
    M = M[:r]
    out = np.empty(M.shape, dtype=object)
    for i, c in enumerate(pivots):
        a = M[i, c]
        out[i] = [Fraction(v, a) for v in M[i]]
    return out, np.array(pivots, dtype=np.int64)
