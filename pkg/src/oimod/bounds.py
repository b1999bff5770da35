"""Regularity and Hilbert-onset bounds, exact polynomial fitting, stable degree probe."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .functors import shift_presentation
from .homology import t0, t1
from .module import Presentation, hilbert

_c_memo: dict[tuple[int, int], int] = {}
_c_lock = threading.Lock()


def c_bound(d: int, r: int) -> int:
    """C_0(r) = r, C_d(r) = C_{d-1}(C_{d-1}(r-1) + 3) + r, exactly."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if d == 0:
        return r
    key = (d, r)
    hit = _c_memo.get(key)
    if hit is not None:
        return hit
    val = c_bound(d - 1, c_bound(d - 1, r - 1) + 3) + r
    with _c_lock:
        return _c_memo.setdefault(key, val)


def closed_form_bound(t0_: int, prd_: int) -> int:
    return 2 ** (2**t0_) * prd_


def filtration_size_bound(t0_: int) -> int:
    return 2 ** (t0_ + 1) - 1


@dataclass(frozen=True)
class BoundReport:
    t0: int
    t1: int
    prd: int
    c_bound: int
    reg_bound: int
    onset_bound: int
    filtration_size_bound: int
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "t0": self.t0,
            "t1": self.t1,
            "prd": self.prd,
            "c_bound": str(self.c_bound),
            "reg_bound": str(self.reg_bound),
            "onset_bound": str(self.onset_bound),
            "filtration_size_bound": str(self.filtration_size_bound),
            "degenerate": self.degenerate,
        }


def reg_bound(P: Presentation) -> BoundReport:
    """Both regularity bounds: the recursive C_{t0}(prd) (sharper) and 2^(2^t0) * prd.

    The zero module has regularity -1; its report is marked degenerate.
    """
    a, b = t0(P), t1(P)
    p = max(a, b)
    if a < 0:
        return BoundReport(a, b, p, -1, -1, 0, 0, degenerate=True)
    closed = closed_form_bound(a, p)
    return BoundReport(a, b, p, c_bound(a, p), closed, closed, filtration_size_bound(a))


class NoPolynomialTail(ValueError):
    pass


@dataclass(frozen=True)
class HilbertFit:
    window: tuple[int, int]
    values: tuple[int, ...]
    coefficients: tuple[Fraction, ...]  # constant term first
    empirical_onset: int

    @property
    def degree(self) -> int:
        return max((k for k, c in enumerate(self.coefficients) if c), default=-1)

    def __call__(self, n) -> Fraction:
        return sum((c * n**k for k, c in enumerate(self.coefficients)), Fraction(0))

    def to_dict(self) -> dict:
        return {
            "window": list(self.window),
            "values": list(self.values),
            "polynomial": [f"{c.numerator}/{c.denominator}" for c in self.coefficients],
            "degree": self.degree,
            "empirical_onset": self.empirical_onset,
        }


def _differences(values, order):
    vals = list(values)
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def interpolate(xs, ys) -> tuple[Fraction, ...]:
    """Monomial coefficients (constant first) of the polynomial through the points, exactly."""
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        # Lagrange basis polynomial for node i, expanded
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fit_values(values, n0: int, max_degree: int) -> HilbertFit:
    """Fit the longest tail of ``values`` (starting at n0) by a polynomial of degree <= max_degree."""
    order = max_degree + 1
    n1 = n0 + len(values) - 1
    if len(values) < order + 2:
        raise ValueError(f"window [{n0}, {n1}] too small for degree {max_degree}")
    onset = None
    # the tail must leave at least one difference of the given order
    for k in range(len(values) - order):
        if not any(_differences(values[k:], order)):
            onset = k
            break
    if onset is None:
        raise NoPolynomialTail(f"no polynomial tail of degree <= {max_degree} in [{n0}, {n1}]")
    tail = values[onset:]
    npts = min(len(tail), order) if order else 1
    xs = [n0 + onset + i for i in range(npts)]
    coeffs = interpolate(xs, tail[:npts]) if order else (Fraction(0),)
    return HilbertFit((n0, n1), tuple(values), coeffs, n0 + onset)


def hilbert_poly_fit(P: Presentation, n0: int, n1: int) -> HilbertFit:
    """Exact polynomial through the longest tail of dims where the (t0+1)-th difference vanishes."""
    d = t0(P)
    if n1 - n0 < d + 2:
        raise ValueError(f"window [{n0}, {n1}] needs length at least t0 + 2 = {d + 2}")
    return fit_values(hilbert(P, n0, n1), n0, d)


def binomial_poly(m: int) -> tuple[Fraction, ...]:
    """Coefficients of n -> C(n, m) as a polynomial in n."""
    xs = list(range(m + 1))
    return interpolate(xs, [comb(x, m) for x in xs])


def std_empirical(P: Presentation, max_shift: int) -> tuple[list[int], int]:
    """t0 of Sigma^n V for n = 0..max_shift and the smallest one seen (no stabilisation claim)."""
    seq = [t0(shift_presentation(P, n)[0]) for n in range(max_shift + 1)]
    return seq, min(seq)
