from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import rref_modp, rref_rational
from .field import Field


def _as_matrix(field: Field, rows, ncols: int) -> np.ndarray:
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        A = rows
    else:
        rows = list(rows)
        if not rows:
            return field.zeros((0, ncols))
        A = np.vstack([np.asarray(r, dtype=field.dtype) for r in rows])
    if A.shape[1] != ncols:
        raise ValueError(f"expected {ncols} columns, got {A.shape[1]}")
    if field.is_prime and A.dtype != np.int64:
        A = field.array(A)
    return A


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of field-valued arrays (reduced mod p for prime fields)."""
    if not field.is_prime:
        return a.dot(b)
    inner = a.shape[-1]
    if inner == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    if (field.p - 1) ** 2 * inner < 2**63:
        return (a @ b) % field.p
    return ((a.astype(object) @ b.astype(object)) % field.p).astype(np.int64)


def row_reduce(field: Field, A: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Exact RREF of a 2-d array; returns the nonzero rows and pivot columns."""
    if A.shape[0] == 0:
        return field.zeros((0, A.shape[1])), ()
    if field.is_prime:
        R, piv = rref_modp(A, field.p)
    else:
        R, piv = rref_rational(A)
    return R, tuple(int(c) for c in piv)


@dataclass(frozen=True)
class Matrix:
    field: Field
    entries: np.ndarray

    @classmethod
    def from_rows(cls, field: Field, rows, ncols: int | None = None) -> "Matrix":
        rows = list(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(field, field.array(rows).reshape(len(rows), ncols) if rows else field.zeros((0, ncols)))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries.shape == other.entries.shape
            and bool(np.all(self.entries == other.entries))
        )

    def __hash__(self):
        return hash((self.field, self.entries.shape, tuple(self.entries.ravel().tolist())))


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form (zero rows kept at the bottom) and rank."""
    R, piv = row_reduce(M.field, M.entries)
    out = M.field.zeros(M.entries.shape)
    out[: len(piv)] = R
    return Matrix(M.field, out), len(piv)


class Subspace:
    """A subspace of field^ambient_dim stored by its RREF basis.

    Two subspaces are equal exactly when their bases are equal, so ``==``
    is a syntactic comparison.  Instances are treated as immutable.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_free")

    def __init__(self, field: Field, ambient_dim: int, basis: np.ndarray, pivots: tuple[int, ...]):
        self.field = field
        self.ambient_dim = ambient_dim
        basis.flags.writeable = False
        self.basis = basis
        self.pivots = pivots
        self._free = None

    @classmethod
    def span(cls, field: Field, vectors, ambient_dim: int) -> "Subspace":
        A = _as_matrix(field, vectors, ambient_dim)
        R, piv = row_reduce(field, A)
        return cls(field, ambient_dim, R, piv)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.zeros((0, ambient_dim)), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.coordinate(field, ambient_dim, range(ambient_dim))

    @classmethod
    def coordinate(cls, field: Field, ambient_dim: int, coords) -> "Subspace":
        """The span of the unit vectors at ``coords``."""
        coords = sorted(set(coords))
        B = field.zeros((len(coords), ambient_dim))
        for i, c in enumerate(coords):
            B[i, c] = field(1)
        return cls(field, ambient_dim, B, tuple(coords))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.dim

    @property
    def free_columns(self) -> tuple[int, ...]:
        """Non-pivot columns; their unit vectors give a basis of the quotient."""
        if self._free is None:
            piv = set(self.pivots)
            self._free = tuple(c for c in range(self.ambient_dim) if c not in piv)
        return self._free

    def _check(self, other: "Subspace"):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient mismatch: {self.field}^{self.ambient_dim} vs {other.field}^{other.ambient_dim}"
            )

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Normal form of v modulo this subspace (zero at every pivot column)."""
        v = np.asarray(v, dtype=self.field.dtype)
        if not self.pivots:
            return v.copy()
        coeffs = v[list(self.pivots)]
        if self.field.is_prime:
            return (v - matmul(self.field, coeffs, self.basis)) % self.field.p
        return v - coeffs.dot(self.basis)

    def reduce_rows(self, A: np.ndarray) -> np.ndarray:
        if not self.pivots or A.shape[0] == 0:
            return A.copy()
        coeffs = A[:, list(self.pivots)]
        if self.field.is_prime:
            return (A - matmul(self.field, coeffs, self.basis)) % self.field.p
        return A - coeffs.dot(self.basis)

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v) != 0)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return not np.any(self.reduce_rows(other.basis) != 0)

    def join(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace.span(self.field, np.vstack([self.basis, other.basis]), self.ambient_dim)

    def add_vectors(self, rows) -> "Subspace":
        A = _as_matrix(self.field, rows, self.ambient_dim)
        if A.shape[0] == 0:
            return self
        # only the part outside the current span can add anything
        A = self.reduce_rows(A)
        keep = np.any(A != 0, axis=1)
        if not keep.any():
            return self
        return Subspace.span(self.field, np.vstack([self.basis, A[keep]]), self.ambient_dim)

    def quotient_coords(self, v) -> np.ndarray:
        """Coordinates of v + self in the quotient basis indexed by free columns."""
        return self.reduce(v)[list(self.free_columns)]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and bool(np.all(self.basis == other.basis))
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.pivots, tuple(self.basis.ravel().tolist())))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.field}^{self.ambient_dim})"


def kernel_basis(M: Matrix) -> Subspace:
    """The nullspace {x : M x = 0} as a subspace of field^cols."""
    field, cols = M.field, M.cols
    R, piv = row_reduce(field, M.entries)
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    K = field.zeros((len(free), cols))
    one = field(1)
    for k, f in enumerate(free):
        K[k, f] = one
        for i, c in enumerate(piv):
            K[k, c] = (-R[i, f]) % field.p if field.is_prime else -R[i, f]
    return Subspace.span(field, K, cols)


def span_join(A: Subspace, B: Subspace) -> Subspace:
    return A.join(B)


def in_span(v, A: Subspace) -> bool:
    return A.contains(v)


def intersect_dim(A: Subspace, B: Subspace) -> int:
    A._check(B)
    return A.dim + B.dim - A.join(B).dim


def intersection(A: Subspace, B: Subspace) -> Subspace:
    """A ∩ B via the kernel of [A; -B]."""
    A._check(B)
    if A.dim == 0 or B.dim == 0:
        return Subspace.zero(A.field, A.ambient_dim)
    field = A.field
    negB = (-B.basis) % field.p if field.is_prime else -B.basis
    K = kernel_basis(Matrix(field, np.vstack([A.basis, negB]).T.copy()))
    if K.dim == 0:
        return Subspace.zero(field, A.ambient_dim)
    coeffs = K.basis[:, : A.dim]
    vecs = matmul(field, coeffs, A.basis)
    return Subspace.span(field, vecs, A.ambient_dim)
