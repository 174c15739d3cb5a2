"""Exact one-shot preparation of a state from Phi^m under PPT-preserving channels

rho is prepared exactly from Phi^m iff some state G satisfies

    -(m - 1) G^T_B <= rho^T_B <= (m + 1) G^T_B,

and the preparing channel then measures {Phi^m, I - Phi^m} and outputs
rho or G. Feasibility is decided by minimizing a uniform slack t.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..config import ToolkitConfig
from ..errors import IntegrityFailure, SolverFailure, ValidationError
from ..linalg import (
    BipartiteOperator,
    antisymmetric_projector,
    kron,
    min_eigenvalue,
    partial_transpose,
    permute_subsystems,
    symmetric_projector,
    trace_distance,
)
from ..measures import OneShotBounds, one_shot_bounds, require_state, solve_kappa
from ..sdp import (
    HermitianUnit,
    ProblemBuilder,
    SdpProblem,
    SdpSolution,
    combine,
    embed_entries,
    embed_hermitian,
    partial_transpose_unit,
    scaled_entries,
    solve,
    traceless_hermitian_basis,
)
from ..states import max_entangled

logger = logging.getLogger(__name__)


def _negated(triplets):
    return [(r, c, -v) for r, c, v in triplets]


def feasibility_program(rho: BipartiteOperator, m: int) -> Tuple[SdpProblem, List[HermitianUnit]]:
    """
    max -t over G = I/n + sum_k y_k F_k (F_k traceless) and t subject to

        G >= 0,  (m+1) G^T_B - rho^T_B + t I >= 0,  rho^T_B + (m-1) G^T_B + t I >= 0

    The last multiplier is t.
    """
    if m < 1:
        raise ValidationError(f"Schmidt rank m must be >= 1, got {m}")
    n = rho.dim
    side = 2 * n
    rho_pt = partial_transpose(rho).matrix
    identity = np.eye(n) / n
    builder = ProblemBuilder([side, side, side])
    builder.set_objective(0, embed_hermitian(identity))
    builder.set_objective(1, embed_hermitian((m + 1) * identity - rho_pt))
    builder.set_objective(2, embed_hermitian(rho_pt + (m - 1) * identity))

    basis = traceless_hermitian_basis(n)
    for k, unit in enumerate(basis):
        transposed = partial_transpose_unit(unit, rho.dim_a, rho.dim_b)
        terms = {
            0: _negated(embed_entries(unit, n)),
            1: _negated(embed_entries(scaled_entries(transposed, m + 1), n)),
        }
        if m > 1:
            terms[2] = _negated(embed_entries(scaled_entries(transposed, m - 1), n))
        builder.add_constraint(terms, rhs=0.0, label=f"G[{k}]")
    slack = [(i, i, -1.0) for i in range(side)]
    builder.add_constraint({1: slack, 2: slack}, rhs=-1.0, label="t")
    return builder.build(), basis


@dataclass
class FeasibilityResult:
    m: int
    t: float
    g: Optional[BipartiteOperator]
    sdp: SdpSolution

    @property
    def feasible(self) -> bool:
        return self.g is not None


def solve_feasibility(
    rho: BipartiteOperator, m: int, config: Optional[ToolkitConfig] = None
) -> FeasibilityResult:
    """
    Minimal slack t for rank m; G is attached iff t <= feasibility_threshold.

    Raises:
        SolverFailure: If the slack program did not solve to optimality
    """
    config = config or ToolkitConfig()
    problem, basis = feasibility_program(rho, m)
    solution = solve(problem, config.solver)
    if not solution.is_optimal:
        raise SolverFailure(
            f"Feasibility program for m={m} ended {solution.status.value}: {solution.message}",
            solution,
        )
    n = rho.dim
    t = float(solution.y[-1])
    g_matrix = np.eye(n) / n + combine(solution.y[:-1], basis, n)
    feasible = t <= config.channels.feasibility_threshold
    logger.debug("m=%d slack t=%.3e (%s)", m, t, "feasible" if feasible else "infeasible")
    return FeasibilityResult(m=m, t=t, g=rho.with_matrix(g_matrix) if feasible else None, sdp=solution)


def feasibility_G(
    rho: BipartiteOperator, m: int, config: Optional[ToolkitConfig] = None
) -> Optional[BipartiteOperator]:
    """The auxiliary state G for rank m, or None when rank m cannot prepare rho"""
    return solve_feasibility(rho, m, config).g


def measure_prepare_apply(
    rho: BipartiteOperator, g: BipartiteOperator, m: int, x: BipartiteOperator
) -> BipartiteOperator:
    """Lambda(X) = rho Tr[Phi^m X] + G Tr[(I - Phi^m) X]"""
    if x.dims != (m, m):
        raise ValidationError(f"Channel input must be {m}x{m}, got {x.dims}")
    if g.dims != rho.dims:
        raise ValidationError(f"G has dims {g.dims}, rho has {rho.dims}")
    phi = max_entangled(m).matrix
    overlap = np.trace(phi @ x.matrix)
    rest = np.trace(x.matrix) - overlap
    return rho.with_matrix(rho.matrix * overlap + g.matrix * rest)


def choi_matrix(rho: BipartiteOperator, g: BipartiteOperator, m: int) -> BipartiteOperator:
    """
    J = sum_ij |i><j| (x) Lambda(|i><j|), input (A^ B^) first, output (A B) second.

    The returned operator is cut as (input) | (output).
    """
    inputs = m * m
    blocks = np.zeros((inputs, inputs, rho.dim, rho.dim), dtype=complex)
    for i in range(inputs):
        for j in range(inputs):
            unit = np.zeros((inputs, inputs), dtype=complex)
            unit[i, j] = 1.0
            blocks[i, j] = measure_prepare_apply(rho, g, m, BipartiteOperator(unit, m, m)).matrix
    choi = blocks.transpose(0, 2, 1, 3).reshape(inputs * rho.dim, inputs * rho.dim)
    return BipartiteOperator(choi, inputs, rho.dim)


def ppt_choi(choi: BipartiteOperator, m: int, dims: Tuple[int, int]) -> BipartiteOperator:
    """Partial transpose of J over (B^, B) jointly, cut as (A^ A) | (B^ B)"""
    dim_a, dim_b = dims
    regrouped = permute_subsystems(choi.matrix, [m, m, dim_a, dim_b], [0, 2, 1, 3])
    return partial_transpose(BipartiteOperator(regrouped, m * dim_a, m * dim_b))


@dataclass
class ChoiVerification:
    choi: BipartiteOperator
    cp_lambda_min: float
    pptp_lambda_min: float
    symmetric_branch_min: float
    antisymmetric_branch_min: Optional[float]
    branch_residual: float


def verify_choi(rho: BipartiteOperator, g: BipartiteOperator, m: int) -> ChoiVerification:
    """
    Eigenvalue checks of J and its partial transpose.

    The partial transpose must equal Pi^S (x) (1/m)[rho^T_B + (m-1) G^T_B]
    + Pi^A (x) (1/m)[(m+1) G^T_B - rho^T_B]; branch_residual is the largest
    entrywise deviation from that identity.
    """
    choi = choi_matrix(rho, g, m)
    transposed = ppt_choi(choi, m, rho.dims)
    rho_pt = partial_transpose(rho).matrix
    g_pt = partial_transpose(g).matrix
    symmetric = (rho_pt + (m - 1) * g_pt) / m
    antisymmetric = ((m + 1) * g_pt - rho_pt) / m
    expected = kron(symmetric_projector(m), symmetric) + kron(antisymmetric_projector(m), antisymmetric)
    # back to (A^ B^ A B) order for comparison
    unordered = permute_subsystems(transposed.matrix, [m, rho.dim_a, m, rho.dim_b], [0, 2, 1, 3])
    return ChoiVerification(
        choi=choi,
        cp_lambda_min=min_eigenvalue(choi.matrix),
        pptp_lambda_min=min_eigenvalue(transposed.matrix),
        symmetric_branch_min=min_eigenvalue(symmetric),
        antisymmetric_branch_min=min_eigenvalue(antisymmetric) if m > 1 else None,
        branch_residual=float(np.max(np.abs(unordered - expected))),
    )


@dataclass
class PreparationCertificate:
    """Smallest m preparing rho exactly, with the channel and its checks"""

    m: int
    g: BipartiteOperator
    choi: BipartiteOperator
    prep_residual: float
    cp_lambda_min: float
    pptp_lambda_min: float
    e_kappa: float
    bounds: OneShotBounds
    slack: float
    branch_residual: float
    minimality_slack: Optional[float]
    scanned: Dict[int, float] = field(default_factory=dict)

    @property
    def cost(self) -> float:
        return math.log2(self.m)

    def failures(self, tol: float = 1e-7, minimality_margin: float = 1e-6, psd_tol: float = 1e-8) -> List[str]:
        """Every certificate invariant that does not hold"""
        problems = []
        g = self.g.matrix
        if min_eigenvalue(g) < -psd_tol:
            problems.append(f"G has lambda_min {min_eigenvalue(g):.3e}")
        if min_eigenvalue(partial_transpose(self.g).matrix) < -tol:
            problems.append("G is not PPT")
        if abs(float(np.trace(g).real) - 1.0) > 1e-8:
            problems.append(f"Tr G = {np.trace(g).real:.12g}")
        if self.prep_residual > tol:
            problems.append(f"Lambda(Phi^m) is {self.prep_residual:.3e} from rho")
        if self.cp_lambda_min < -tol:
            problems.append(f"Choi lambda_min {self.cp_lambda_min:.3e}")
        if self.pptp_lambda_min < -tol:
            problems.append(f"Choi partial transpose lambda_min {self.pptp_lambda_min:.3e}")
        if self.branch_residual > tol:
            problems.append(f"branch identity residual {self.branch_residual:.3e}")
        if not self.bounds.contains(self.cost):
            problems.append(f"log2 m = {self.cost:.9g} outside the sandwich")
        if self.e_kappa > self.cost + 1e-6:
            problems.append(f"E_kappa {self.e_kappa:.9g} exceeds log2 m")
        if self.m >= 2 and (self.minimality_slack is None or self.minimality_slack <= minimality_margin):
            problems.append(f"m - 1 = {self.m - 1} not certified infeasible (t = {self.minimality_slack})")
        return problems

    def summary(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "log2_m": self.cost,
            "e_kappa": self.e_kappa,
            **self.bounds.to_dict(),
            "slack": self.slack,
            "minimality_slack": self.minimality_slack,
            "prep_residual": self.prep_residual,
            "cp_lambda_min": self.cp_lambda_min,
            "pptp_lambda_min": self.pptp_lambda_min,
            "branch_residual": self.branch_residual,
            "scanned": {str(k): v for k, v in self.scanned.items()},
        }


def search_window(e_kappa: float, guard: float = 1e-6) -> Tuple[int, int]:
    """Integer m range allowed by the one-shot sandwich"""
    power = 2.0 ** e_kappa
    return max(1, math.ceil(power - 1.0 - guard)), math.floor(power + 2.0 + guard)


def one_shot_exact_cost(
    rho: BipartiteOperator, config: Optional[ToolkitConfig] = None
) -> PreparationCertificate:
    """
    Scan m upward through the sandwich window and certify the first feasible one.

    Raises:
        IntegrityFailure: If no m in the window is feasible
        SolverFailure: If any program fails to solve
    """
    config = config or ToolkitConfig()
    require_state(rho, config)
    e_kappa = solve_kappa(rho, config).e_kappa_primal
    bounds = one_shot_bounds(e_kappa)
    lo, hi = search_window(e_kappa, config.channels.window_guard)
    logger.info("Scanning m in [%d, %d] for E_kappa = %.9f", lo, hi, e_kappa)

    scanned: Dict[int, float] = {}
    found: Optional[FeasibilityResult] = None
    for m in range(lo, hi + 1):
        result = solve_feasibility(rho, m, config)
        scanned[m] = result.t
        if result.feasible:
            found = result
            break
        logger.debug("Rejected m=%d with slack %.3e", m, result.t)
    if found is None:
        raise IntegrityFailure(
            f"No m in [{lo}, {hi}] prepares the state",
            {"e_kappa": e_kappa, "window": (lo, hi), "slack": scanned},
        )

    m, g = found.m, found.g
    minimality = None
    if m >= 2:
        minimality = scanned.get(m - 1)
        if minimality is None:
            minimality = solve_feasibility(rho, m - 1, config).t
            scanned[m - 1] = minimality

    prepared = measure_prepare_apply(rho, g, m, max_entangled(m))
    check = verify_choi(rho, g, m)
    return PreparationCertificate(
        m=m,
        g=g,
        choi=check.choi,
        prep_residual=trace_distance(prepared.matrix, rho.matrix),
        cp_lambda_min=check.cp_lambda_min,
        pptp_lambda_min=check.pptp_lambda_min,
        e_kappa=e_kappa,
        bounds=bounds,
        slack=found.t,
        branch_residual=check.branch_residual,
        minimality_slack=minimality,
        scanned=dict(sorted(scanned.items())),
    )
