"""Additivity of E_kappa under tensor products"""

from dataclasses import dataclass
from typing import Optional

from ..config import ToolkitConfig
from ..errors import ValidationError
from ..linalg import BipartiteOperator, kron_operators
from .kappa import solve_kappa


@dataclass(frozen=True)
class AdditivityResult:
    lhs: float
    rhs: float
    parts: tuple

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)


def additivity_check(
    rho: BipartiteOperator,
    omega: BipartiteOperator,
    config: Optional[ToolkitConfig] = None,
) -> AdditivityResult:
    """
    Compare E_kappa(rho (x) omega) on the AA'|BB' cut with E_kappa(rho) + E_kappa(omega).

    Raises:
        ValidationError: If the joint dimension exceeds the solver limit
    """
    config = config or ToolkitConfig()
    joint_dim = rho.dim * omega.dim
    if joint_dim > config.measures.max_dimension:
        raise ValidationError(
            f"Joint dimension {joint_dim} exceeds the solver limit {config.measures.max_dimension}"
        )
    first = solve_kappa(rho, config).e_kappa_primal
    second = solve_kappa(omega, config).e_kappa_primal
    joint = solve_kappa(kron_operators(rho, omega), config).e_kappa_primal
    return AdditivityResult(lhs=joint, rhs=first + second, parts=(first, second))
