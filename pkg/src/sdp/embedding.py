"""Complex Hermitian matrices in the real symmetric cone

A Hermitian h = R + iI is represented by the real symmetric

    embed(h) = [[R, -I],
                [I,  R]]

which is PSD iff h is PSD, repeats each eigenvalue twice and satisfies
<embed(h), embed(k)> = 2 Tr(h k).
"""

from typing import List, Sequence, Tuple

import numpy as np

from ..linalg import require_hermitian

# One Hermitian basis element as its nonzero (row, col, value) entries
HermitianUnit = Tuple[Tuple[int, int, complex], ...]


def embed_hermitian(h: np.ndarray) -> np.ndarray:
    """Real symmetric embedding of a Hermitian matrix"""
    h = np.asarray(h, dtype=complex)
    require_hermitian(h, "embedding input")
    re, im = h.real, h.imag
    return np.block([[re, -im], [im, re]])


def complex_part(x: np.ndarray) -> np.ndarray:
    """
    Hermitian matrix a real symmetric 2n x 2n block stands for.

    For any symmetric x, <embed(h), x> = 2 Re Tr(h complex_part(x)), and
    complex_part(embed(h)) = h.
    """
    n = x.shape[0] // 2
    x11, x12 = x[:n, :n], x[:n, n:]
    x21, x22 = x[n:, :n], x[n:, n:]
    return (x11 + x22) / 2 + 1j * (x21 - x12) / 2


def embed_entries(unit: HermitianUnit, n: int) -> List[Tuple[int, int, float]]:
    """Real triplets of embed(E) for a sparse Hermitian E on C^n"""
    triplets = []
    for r, c, z in unit:
        if z.real != 0.0:
            triplets.append((r, c, z.real))
            triplets.append((r + n, c + n, z.real))
        if z.imag != 0.0:
            triplets.append((r, c + n, -z.imag))
            triplets.append((r + n, c, z.imag))
    return triplets


def scaled_entries(unit: HermitianUnit, factor: float) -> HermitianUnit:
    return tuple((r, c, factor * z) for r, c, z in unit)


def hermitian_basis(n: int) -> List[HermitianUnit]:
    """
    Real basis of the n x n Hermitian matrices (n^2 elements).

    Diagonal units E_ii first, then for each i < j the pair
    E_ij + E_ji and -i E_ij + i E_ji.
    """
    basis: List[HermitianUnit] = [((i, i, 1.0 + 0j),) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(((i, j, 1.0 + 0j), (j, i, 1.0 + 0j)))
            basis.append(((i, j, -1j), (j, i, 1j)))
    return basis


def traceless_hermitian_basis(n: int) -> List[HermitianUnit]:
    """Basis of traceless Hermitian matrices: E_ii - E_{n-1,n-1} plus the off-diagonal pairs"""
    last = n - 1
    basis: List[HermitianUnit] = [((i, i, 1.0 + 0j), (last, last, -1.0 + 0j)) for i in range(last)]
    basis.extend(unit for unit in hermitian_basis(n) if len(unit) == 2)
    return basis


def unit_matrix(unit: HermitianUnit, n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=complex)
    for r, c, z in unit:
        out[r, c] += z
    return out


def unit_trace(unit: HermitianUnit) -> float:
    return float(sum(z.real for r, c, z in unit if r == c))


def combine(coefficients: Sequence[float], basis: Sequence[HermitianUnit], n: int) -> np.ndarray:
    """sum_k y_k E_k as a dense Hermitian matrix"""
    out = np.zeros((n, n), dtype=complex)
    for y, unit in zip(coefficients, basis):
        if y == 0.0:
            continue
        for r, c, z in unit:
            out[r, c] += y * z
    return out


def partial_transpose_unit(unit: HermitianUnit, dim_a: int, dim_b: int) -> HermitianUnit:
    """Move entry ((a, b), (a', b')) to ((a, b'), (a', b))"""
    moved = []
    for r, c, z in unit:
        a, b = divmod(r, dim_b)
        a2, b2 = divmod(c, dim_b)
        moved.append((a * dim_b + b2, a2 * dim_b + b, z))
    return tuple(moved)
