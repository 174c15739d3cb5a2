"""Bipartite operators, tensor products and partial operations

Basis convention: |i>_A (x) |j>_B is row i * d_B + j (A-major). Every
reshape in this module relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from ..errors import ValidationError

HERMITIAN_RTOL = 1e-12

Subsystem = Literal["A", "B"]


def hermiticity_violation(x: np.ndarray) -> float:
    """Largest entrywise |X_ij - conj(X_ji)|"""
    return float(np.max(np.abs(x - x.conj().T))) if x.size else 0.0


def is_hermitian(x: np.ndarray, rtol: float = HERMITIAN_RTOL) -> bool:
    """Hermitian within max|X - X^dag| <= rtol * (1 + max|X|)"""
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        return False
    scale = 1.0 + (float(np.max(np.abs(x))) if x.size else 0.0)
    return hermiticity_violation(x) <= rtol * scale


def require_hermitian(x: np.ndarray, name: str = "matrix", rtol: float = HERMITIAN_RTOL) -> None:
    """Raise ValidationError carrying the symmetry violation if x is not Hermitian"""
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {x.shape}")
    if not is_hermitian(x, rtol):
        scale = 1.0 + float(np.max(np.abs(x)))
        raise ValidationError(
            f"{name} is not Hermitian: max|X - X^dag| = {hermiticity_violation(x):.3e} "
            f"exceeds {rtol:.1e} * {scale:.3e}"
        )


@dataclass(frozen=True, eq=False)
class BipartiteOperator:
    """Square operator on C^{d_A} (x) C^{d_B}"""

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if self.dim_a < 1 or self.dim_b < 1:
            raise ValidationError(f"Local dimensions must be positive, got ({self.dim_a}, {self.dim_b})")
        side = self.dim_a * self.dim_b
        if matrix.shape != (side, side):
            raise ValidationError(
                f"Operator of shape {matrix.shape} does not match local dimensions "
                f"({self.dim_a}, {self.dim_b})"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)

    def with_matrix(self, matrix: np.ndarray) -> "BipartiteOperator":
        """Same bipartition, different matrix"""
        return BipartiteOperator(matrix, self.dim_a, self.dim_b)

    def __add__(self, other: "BipartiteOperator") -> "BipartiteOperator":
        _require_same_dims(self, other)
        return self.with_matrix(self.matrix + other.matrix)

    def __sub__(self, other: "BipartiteOperator") -> "BipartiteOperator":
        _require_same_dims(self, other)
        return self.with_matrix(self.matrix - other.matrix)

    def __mul__(self, scalar: complex) -> "BipartiteOperator":
        return self.with_matrix(self.matrix * scalar)

    __rmul__ = __mul__


def _require_same_dims(x: BipartiteOperator, y: BipartiteOperator) -> None:
    if x.dims != y.dims:
        raise ValidationError(f"Bipartitions differ: {x.dims} vs {y.dims}")


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b"""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_operators(x: BipartiteOperator, y: BipartiteOperator) -> BipartiteOperator:
    """x (x) y regrouped as (A A') | (B B')"""
    joint = kron(x.matrix, y.matrix)
    regrouped = permute_subsystems(joint, [x.dim_a, x.dim_b, y.dim_a, y.dim_b], [0, 2, 1, 3])
    return BipartiteOperator(regrouped, x.dim_a * y.dim_a, x.dim_b * y.dim_b)


def partial_transpose(x: BipartiteOperator) -> BipartiteOperator:
    """
    Transpose on subsystem B in the computational basis.

    Entry ((i, j), (k, l)) of the result is entry ((i, l), (k, j)) of x.
    """
    da, db = x.dims
    tensor = x.matrix.reshape(da, db, da, db)
    return x.with_matrix(tensor.transpose(0, 3, 2, 1).reshape(x.dim, x.dim))


def partial_trace(x: BipartiteOperator, keep: Subsystem) -> np.ndarray:
    """Trace out the subsystem that is not kept"""
    da, db = x.dims
    tensor = x.matrix.reshape(da, db, da, db)
    if keep == "A":
        return np.einsum("ijkj->ik", tensor)
    if keep == "B":
        return np.einsum("ijil->jl", tensor)
    raise ValidationError(f"keep must be 'A' or 'B', got {keep!r}")


def permute_subsystems(matrix: np.ndarray, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """
    Reorder the tensor factors of an operator.

    Args:
        matrix: Operator on the product of spaces with dimensions ``dims``
        dims: Local dimensions in the current order
        perm: New order, ``perm[k]`` is the old position of factor k

    Returns:
        Operator on the permuted product space
    """
    dims = list(dims)
    perm = list(perm)
    if sorted(perm) != list(range(len(dims))):
        raise ValidationError(f"{perm} is not a permutation of {len(dims)} factors")
    total = int(np.prod(dims))
    if matrix.shape != (total, total):
        raise ValidationError(f"Operator of shape {matrix.shape} does not match dims {dims}")
    n = len(dims)
    tensor = np.asarray(matrix).reshape(dims + dims)
    axes = perm + [p + n for p in perm]
    return tensor.transpose(axes).reshape(total, total)


def swap_operator(d: int) -> np.ndarray:
    """Flip operator F |i>|j> = |j>|i> on C^d (x) C^d"""
    flip = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            flip[j * d + i, i * d + j] = 1.0
    return flip


def symmetric_projector(d: int) -> np.ndarray:
    return (np.eye(d * d) + swap_operator(d)) / 2


def antisymmetric_projector(d: int) -> np.ndarray:
    return (np.eye(d * d) - swap_operator(d)) / 2
