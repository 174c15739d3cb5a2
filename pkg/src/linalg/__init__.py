"""Complex dense linear algebra kernel"""

from .operators import (
    BipartiteOperator,
    HERMITIAN_RTOL,
    antisymmetric_projector,
    hermiticity_violation,
    is_hermitian,
    kron,
    kron_operators,
    partial_trace,
    partial_transpose,
    permute_subsystems,
    require_hermitian,
    swap_operator,
    symmetric_projector,
)
from .spectral import (
    herm_eig,
    hermitian_abs,
    is_psd,
    min_eigenvalue,
    spectral_norm,
    trace_distance,
    trace_norm,
)

__all__ = [
    "BipartiteOperator",
    "HERMITIAN_RTOL",
    "antisymmetric_projector",
    "herm_eig",
    "hermitian_abs",
    "hermiticity_violation",
    "is_hermitian",
    "is_psd",
    "kron",
    "kron_operators",
    "min_eigenvalue",
    "partial_trace",
    "partial_transpose",
    "permute_subsystems",
    "require_hermitian",
    "spectral_norm",
    "swap_operator",
    "symmetric_projector",
    "trace_distance",
    "trace_norm",
]
