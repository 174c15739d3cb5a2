"""Seeded random density matrices"""

import numpy as np

from ..errors import ValidationError
from ..linalg import BipartiteOperator


def random_state(dim_a: int, dim_b: int, rank: int, seed: int) -> BipartiteOperator:
    """
    Ginibre-ensemble density matrix rho = G G^dag / Tr(G G^dag).

    Args:
        dim_a: Local dimension of A
        dim_b: Local dimension of B
        rank: Number of columns of G, the rank of rho almost surely
        seed: Seed of the numpy Generator; equal seeds give equal matrices

    Returns:
        Random state on C^{dim_a} (x) C^{dim_b}
    """
    if dim_a < 1 or dim_b < 1:
        raise ValidationError(f"Local dimensions must be positive, got ({dim_a}, {dim_b})")
    n = dim_a * dim_b
    if not 1 <= rank <= n:
        raise ValidationError(f"rank must lie in [1, {n}], got {rank}")
    if seed < 0:
        raise ValidationError(f"seed must be non-negative, got {seed}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return BipartiteOperator(rho / np.trace(rho).real, dim_a, dim_b)


def random_pure_state(dim_a: int, dim_b: int, seed: int) -> BipartiteOperator:
    return random_state(dim_a, dim_b, 1, seed)
