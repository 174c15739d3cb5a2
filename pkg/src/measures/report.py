"""All measures of one state in a single report"""

from typing import Any, Dict, Optional, TypedDict

from ..config import ToolkitConfig
from ..linalg import BipartiteOperator
from .bounds import one_shot_bounds
from .kappa import solve_kappa
from .negativity import binegativity_holds, log_negativity, z_bound


class MeasureReport(TypedDict):
    """Every quantity computed for one state"""

    dim_a: int
    dim_b: int
    e_kappa_primal: float  # bits
    e_kappa_dual: float  # bits
    e_n: float  # logarithmic negativity, bits
    log2_z: float  # bits
    one_shot_lower: float  # bits, -inf when e_kappa = 0
    one_shot_upper: float  # bits
    binegativity_holds: bool
    diagnostics: Dict[str, Any]  # solver status, residuals, iterations


class IrreversibilityChain(TypedDict):
    e_n: float
    e_kappa: float
    log2_z: float
    strict: bool  # E_N < E_kappa < log2 Z


def measure_state(rho: BipartiteOperator, config: Optional[ToolkitConfig] = None) -> MeasureReport:
    """
    Compute E_kappa (both programs), E_N, log2 Z, the one-shot sandwich and binegativity.

    Args:
        rho: Bipartite density matrix
        config: Toolkit configuration

    Returns:
        MeasureReport for rho
    """
    config = config or ToolkitConfig()
    kappa = solve_kappa(rho, config)
    bounds = one_shot_bounds(kappa.e_kappa_primal)
    eig_zero = config.measures.eig_zero_tol
    return MeasureReport(
        dim_a=rho.dim_a,
        dim_b=rho.dim_b,
        e_kappa_primal=kappa.e_kappa_primal,
        e_kappa_dual=kappa.e_kappa_dual,
        e_n=log_negativity(rho),
        log2_z=z_bound(rho, eig_zero),
        one_shot_lower=bounds.lower,
        one_shot_upper=bounds.upper,
        binegativity_holds=binegativity_holds(rho, config.measures.binegativity_tol, eig_zero),
        diagnostics=kappa.diagnostics(),
    )


def irreversibility_chain(
    rho: BipartiteOperator,
    config: Optional[ToolkitConfig] = None,
    margin: float = 1e-6,
) -> IrreversibilityChain:
    """(E_N, E_kappa, log2 Z) and whether both inequalities are strict by more than margin"""
    config = config or ToolkitConfig()
    e_n = log_negativity(rho)
    e_k = solve_kappa(rho, config).e_kappa_primal
    log2_z = z_bound(rho, config.measures.eig_zero_tol)
    return IrreversibilityChain(
        e_n=e_n,
        e_kappa=e_k,
        log2_z=log2_z,
        strict=bool(e_n + margin < e_k < log2_z - margin),
    )
