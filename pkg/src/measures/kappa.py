"""kappa-entanglement from one SDP solve

The program is assembled with S as the free variable of the LMI side:

    max -Tr S  s.t.  S >= 0,  S^T_B - rho^T_B >= 0,  S^T_B + rho^T_B >= 0

S = sum_k y_k E_k over a real basis of Hermitian matrices, so y are the
solver's dual multipliers and each block is complex-embedded. The
equality-form side of the same solve carries X_1, X_2, X_3 with
X_1 + (X_2 + X_3)^T_B = I/2, which gives the dual program's optimizers
V = (2 X_2)^T_B and W = (2 X_3)^T_B with value Tr rho (V - W).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..config import ToolkitConfig
from ..errors import IntegrityFailure, SolverFailure, ValidationError
from ..linalg import BipartiteOperator, min_eigenvalue, partial_transpose, spectral_norm
from ..sdp import (
    HermitianUnit,
    ProblemBuilder,
    SdpProblem,
    SdpSolution,
    combine,
    complex_part,
    embed_entries,
    embed_hermitian,
    hermitian_basis,
    partial_transpose_unit,
    solve,
    unit_trace,
)
from ..states import validate_density

logger = logging.getLogger(__name__)

STATE_PSD_TOL = 1e-8
STATE_TRACE_TOL = 1e-8


def clamp_bits(value: float, zero_clamp: float) -> float:
    """Values within zero_clamp of 0 become exactly 0"""
    return 0.0 if abs(value) <= zero_clamp else value


def _negated(triplets):
    return [(r, c, -v) for r, c, v in triplets]


def kappa_program(rho: BipartiteOperator) -> Tuple[SdpProblem, List[HermitianUnit]]:
    """
    Assemble the kappa SDP for a state.

    Returns:
        The problem (three blocks of side 2 d_A d_B, (d_A d_B)^2
        constraints) and the Hermitian basis its multipliers refer to
    """
    n = rho.dim
    side = 2 * n
    rho_pt = embed_hermitian(partial_transpose(rho).matrix)
    builder = ProblemBuilder([side, side, side])
    builder.set_objective(1, -rho_pt)
    builder.set_objective(2, rho_pt)

    basis = hermitian_basis(n)
    for k, unit in enumerate(basis):
        transposed = _negated(embed_entries(partial_transpose_unit(unit, rho.dim_a, rho.dim_b), n))
        builder.add_constraint(
            {0: _negated(embed_entries(unit, n)), 1: transposed, 2: transposed},
            rhs=-unit_trace(unit),
            label=f"S[{k}]",
        )
    return builder.build(), basis


@dataclass
class KappaSolution:
    """Both kappa values and their optimizers from a single solve"""

    e_kappa_primal: float
    e_kappa_dual: float
    s: BipartiteOperator
    v: BipartiteOperator
    w: BipartiteOperator
    sdp: SdpSolution
    residuals: Dict[str, float] = field(default_factory=dict)

    @property
    def gap(self) -> float:
        return abs(self.e_kappa_primal - self.e_kappa_dual)

    def diagnostics(self) -> Dict[str, Any]:
        return {**self.sdp.summary(), **self.residuals}


def require_state(rho: BipartiteOperator, config: ToolkitConfig, name: str = "state") -> BipartiteOperator:
    if rho.dim > config.measures.max_dimension:
        raise ValidationError(
            f"{name} has dimension {rho.dim}, above the solver limit {config.measures.max_dimension}"
        )
    return validate_density(rho, psd_tol=STATE_PSD_TOL, trace_tol=STATE_TRACE_TOL, name=name)


def solve_kappa(rho: BipartiteOperator, config: Optional[ToolkitConfig] = None) -> KappaSolution:
    """
    Solve the kappa program and read off primal and dual optimizers.

    Raises:
        ValidationError: If rho is not a density matrix or is too large
        SolverFailure: If the solve did not end Optimal
        IntegrityFailure: If an optimizer violates its constraints
    """
    config = config or ToolkitConfig()
    require_state(rho, config)
    problem, basis = kappa_program(rho)
    solution = solve(problem, config.solver)
    if not solution.is_optimal:
        raise SolverFailure(
            f"kappa program for a {rho.dim_a}x{rho.dim_b} state ended {solution.status.value}: "
            f"{solution.message} (pres={solution.primal_residual:.2e}, dres={solution.dual_residual:.2e}, "
            f"gap={solution.gap:.2e})",
            solution,
        )

    n = rho.dim
    rho_pt = partial_transpose(rho)
    s = rho.with_matrix(combine(solution.y, basis, n))
    s_pt = partial_transpose(s)
    v = partial_transpose(rho.with_matrix(2 * complex_part(solution.x[1])))
    w = partial_transpose(rho.with_matrix(2 * complex_part(solution.x[2])))

    residuals = {
        "s_min_eig": min_eigenvalue(s.matrix),
        "upper_min_eig": min_eigenvalue(s_pt.matrix - rho_pt.matrix),
        "lower_min_eig": min_eigenvalue(s_pt.matrix + rho_pt.matrix),
        "v_pt_min_eig": min_eigenvalue(partial_transpose(v).matrix),
        "w_pt_min_eig": min_eigenvalue(partial_transpose(w).matrix),
        "v_plus_w_excess": -min_eigenvalue(np.eye(n) - (v + w).matrix),
    }
    tol = config.channels.certificate_tol
    scale = 1.0 + spectral_norm(s.matrix)
    violated = {
        key: value for key, value in residuals.items()
        if (key == "v_plus_w_excess" and value > tol) or (key != "v_plus_w_excess" and value < -tol * scale)
    }
    if violated:
        raise IntegrityFailure(f"kappa optimizers violate their constraints: {violated}", residuals)

    trace_s = float(np.trace(s.matrix).real)
    witnessed = float(np.trace(rho.matrix @ (v - w).matrix).real)
    if trace_s <= 0.0 or witnessed <= 0.0:
        raise IntegrityFailure(
            "kappa objectives must be positive",
            {"trace_s": trace_s, "tr_rho_v_minus_w": witnessed, **residuals},
        )
    zero_clamp = config.measures.zero_clamp
    primal = max(0.0, clamp_bits(float(np.log2(trace_s)), zero_clamp))
    dual = max(0.0, clamp_bits(float(np.log2(witnessed)), zero_clamp))
    residuals["kappa_gap"] = abs(primal - dual)
    logger.debug("E_kappa primal %.9f dual %.9f after %d iterations", primal, dual, solution.iterations)
    return KappaSolution(primal, dual, s, v, w, solution, residuals)


def e_kappa_primal(
    rho: BipartiteOperator, config: Optional[ToolkitConfig] = None
) -> Tuple[float, BipartiteOperator]:
    """E_kappa(rho) = log2 min Tr S and the optimal S"""
    result = solve_kappa(rho, config)
    return result.e_kappa_primal, result.s


def e_kappa_dual(
    rho: BipartiteOperator, config: Optional[ToolkitConfig] = None
) -> Tuple[float, BipartiteOperator, BipartiteOperator]:
    """log2 max Tr rho(V - W) over V + W <= I, V^T_B, W^T_B >= 0, with the optimal V and W"""
    result = solve_kappa(rho, config)
    return result.e_kappa_dual, result.v, result.w


def e_kappa(rho: BipartiteOperator, config: Optional[ToolkitConfig] = None) -> float:
    return solve_kappa(rho, config).e_kappa_primal
