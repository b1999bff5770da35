"""Exact linear algebra over Q and F_p."""

from .field import GF, QQ, Field
from .subspace import (
    Matrix,
    Subspace,
    in_span,
    intersect_dim,
    intersection,
    kernel_basis,
    matmul,
    row_reduce,
    rref,
    span_join,
)

__all__ = [
    "Field",
    "GF",
    "QQ",
    "Matrix",
    "Subspace",
    "in_span",
    "intersect_dim",
    "intersection",
    "kernel_basis",
    "matmul",
    "row_reduce",
    "rref",
    "span_join",
]
