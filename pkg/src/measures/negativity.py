"""Closed-form measures built on the partial transpose"""

import numpy as np

from ..linalg import BipartiteOperator, hermitian_abs, is_psd, partial_transpose, trace_norm

DEFAULT_EIG_ZERO_TOL = 1e-12
DEFAULT_BINEGATIVITY_TOL = 1e-9


def log_negativity(rho: BipartiteOperator) -> float:
    """E_N(rho) = log2 ||rho^T_B||_1"""
    return max(0.0, float(np.log2(trace_norm(partial_transpose(rho).matrix))))


def binegativity_operator(rho: BipartiteOperator, eig_zero_tol: float = DEFAULT_EIG_ZERO_TOL) -> BipartiteOperator:
    """|rho^T_B|^T_B"""
    magnitude = hermitian_abs(partial_transpose(rho).matrix, eig_zero_tol)
    return partial_transpose(rho.with_matrix(magnitude))


def z_bound(rho: BipartiteOperator, eig_zero_tol: float = DEFAULT_EIG_ZERO_TOL) -> float:
    """
    log2 Z(rho), an upper bound on E_kappa for finite dimensions.

    Z(rho) = ||rho^T_B||_1 + d_A d_B max(0, -lambda_min(|rho^T_B|^T_B))
    """
    norm = trace_norm(partial_transpose(rho).matrix)
    lowest = float(np.linalg.eigvalsh(binegativity_operator(rho, eig_zero_tol).matrix)[0])
    return max(0.0, float(np.log2(norm + rho.dim * max(0.0, -lowest))))


def binegativity_holds(
    rho: BipartiteOperator,
    tol: float = DEFAULT_BINEGATIVITY_TOL,
    eig_zero_tol: float = DEFAULT_EIG_ZERO_TOL,
) -> bool:
    """True iff |rho^T_B|^T_B >= 0, which forces E_kappa = E_N"""
    return is_psd(binegativity_operator(rho, eig_zero_tol).matrix, tol)


def is_ppt(rho: BipartiteOperator, tol: float = 1e-8) -> bool:
    return is_psd(partial_transpose(rho).matrix, tol)
