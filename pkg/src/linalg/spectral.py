"""Dense Hermitian eigendecomposition and the quantities derived from it"""

from typing import Tuple

import numpy as np

from .operators import HERMITIAN_RTOL, require_hermitian


def herm_eig(h: np.ndarray, rtol: float = HERMITIAN_RTOL) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition h = U diag(lambda) U^dag.

    Args:
        h: Hermitian matrix
        rtol: Relative Hermiticity tolerance

    Returns:
        Ascending real eigenvalues and the unitary of eigenvectors (columns)

    Raises:
        ValidationError: If h is not Hermitian within tolerance
    """
    h = np.asarray(h, dtype=complex)
    require_hermitian(h, "eigendecomposition input", rtol)
    # eigh reads one triangle only; symmetrize so both triangles count
    eigenvalues, eigenvectors = np.linalg.eigh((h + h.conj().T) / 2)
    return eigenvalues, eigenvectors


def hermitian_abs(h: np.ndarray, zero_tol: float = 0.0) -> np.ndarray:
    """|h| = U |Lambda| U^dag, eigenvalues with |lambda| <= zero_tol set to 0"""
    eigenvalues, unitary = herm_eig(h)
    magnitudes = np.abs(eigenvalues)
    magnitudes[magnitudes <= zero_tol] = 0.0
    return (unitary * magnitudes) @ unitary.conj().T


def spectral_norm(h: np.ndarray) -> float:
    """Largest |lambda| of a Hermitian matrix"""
    if h.size == 0:
        return 0.0
    eigenvalues = np.linalg.eigvalsh((h + h.conj().T) / 2)
    return float(np.max(np.abs(eigenvalues)))


def min_eigenvalue(h: np.ndarray) -> float:
    """Smallest eigenvalue of a Hermitian matrix"""
    return float(np.linalg.eigvalsh((h + h.conj().T) / 2)[0])


def trace_norm(x: np.ndarray) -> float:
    """Sum of singular values; sum of |eigenvalues| for Hermitian input"""
    x = np.asarray(x, dtype=complex)
    if np.allclose(x, x.conj().T, rtol=0.0, atol=HERMITIAN_RTOL * (1.0 + np.max(np.abs(x)))):
        return float(np.sum(np.abs(np.linalg.eigvalsh((x + x.conj().T) / 2))))
    return float(np.sum(np.linalg.svd(x, compute_uv=False)))


def trace_distance(x: np.ndarray, y: np.ndarray) -> float:
    """(1/2) ||x - y||_1"""
    return 0.5 * trace_norm(np.asarray(x) - np.asarray(y))


def is_psd(h: np.ndarray, tol: float) -> bool:
    """True iff lambda_min(h) >= -tol * (1 + ||h||)"""
    h = np.asarray(h, dtype=complex)
    eigenvalues = np.linalg.eigvalsh((h + h.conj().T) / 2)
    scale = 1.0 + float(np.max(np.abs(eigenvalues)))
    return bool(eigenvalues[0] >= -tol * scale)
