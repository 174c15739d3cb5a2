"""Independent re-verification of solver output"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from ..config import SolverConfig
from .problem import SdpProblem, SdpSolution


@dataclass
class CertificateReport:
    """Residuals recomputed from the returned iterate"""

    equality_residual: float
    primal_min_eigenvalues: List[float]
    dual_min_eigenvalues: List[float]
    primal_objective: float
    dual_objective: float
    gap: float
    certified: bool
    issues: List[str]

    @property
    def primal_psd_violation(self) -> float:
        return max(0.0, -min(self.primal_min_eigenvalues))

    @property
    def dual_psd_violation(self) -> float:
        return max(0.0, -min(self.dual_min_eigenvalues))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def check_certificate(
    problem: SdpProblem,
    solution: SdpSolution,
    config: Optional[SolverConfig] = None,
    slack: float = 10.0,
) -> CertificateReport:
    """
    Recompute A(X) - b, block eigenvalues and the duality gap from scratch.

    Args:
        problem: The solved problem
        solution: Solver output for it
        config: Solver tolerances the residuals are judged against
        slack: Multiple of the solver tolerances still accepted

    Returns:
        CertificateReport; ``certified`` is False when any residual exceeds
        ``slack`` times its tolerance or the solve was not Optimal
    """
    cfg = config or SolverConfig()
    x, y = solution.x, solution.y
    equality = float(np.max(np.abs(problem.apply(x) - problem.rhs))) if problem.num_constraints else 0.0
    slack_blocks = [c - a for c, a in zip(problem.objective, problem.adjoint(y))]
    primal_eigs = [float(np.linalg.eigvalsh((xi + xi.T) / 2)[0]) for xi in x]
    dual_eigs = [float(np.linalg.eigvalsh((si + si.T) / 2)[0]) for si in slack_blocks]
    pobj = problem.objective_value(x)
    dobj = float(problem.rhs @ y)
    gap = abs(pobj - dobj)

    b_scale = 1.0 + float(np.max(np.abs(problem.rhs))) if problem.num_constraints else 1.0
    x_scale = 1.0 + max(float(np.max(np.abs(xi))) for xi in x)
    s_scale = 1.0 + max(float(np.max(np.abs(si))) for si in slack_blocks)

    issues = []
    if not solution.is_optimal:
        issues.append(f"solver status is {solution.status.value}")
    if equality > slack * cfg.feas_tol * b_scale:
        issues.append(f"max |A(X) - b| = {equality:.3e}")
    if min(primal_eigs) < -slack * cfg.feas_tol * x_scale:
        issues.append(f"primal block lambda_min = {min(primal_eigs):.3e}")
    if min(dual_eigs) < -slack * cfg.feas_tol * s_scale:
        issues.append(f"dual slack lambda_min = {min(dual_eigs):.3e}")
    if gap > slack * cfg.gap_tol * (1.0 + abs(pobj)):
        issues.append(f"duality gap = {gap:.3e}")

    return CertificateReport(
        equality_residual=equality,
        primal_min_eigenvalues=primal_eigs,
        dual_min_eigenvalues=dual_eigs,
        primal_objective=pobj,
        dual_objective=dobj,
        gap=gap,
        certified=not issues,
        issues=issues,
    )
