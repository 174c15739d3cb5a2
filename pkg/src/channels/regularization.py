"""Per-copy one-shot cost of small tensor powers"""

import math
from typing import Optional, TypedDict

from ..config import ToolkitConfig
from ..errors import ValidationError
from ..linalg import BipartiteOperator
from ..states import tensor_power
from .preparation import one_shot_exact_cost


class TensorPowerCost(TypedDict):
    n: int
    e_kappa_per_copy: float
    m: int
    cost_per_copy: float  # (1/n) log2 m_n
    lower_per_copy: float
    upper_per_copy: float


def tensor_power_cost(
    rho: BipartiteOperator, n: int, config: Optional[ToolkitConfig] = None
) -> TensorPowerCost:
    """
    Certify the exact cost of rho^{(x) n} and divide by n.

    The per-copy sandwich tightens around E_kappa as n grows, which is how
    the one-shot cost regularizes to E_kappa.
    """
    config = config or ToolkitConfig()
    if n not in (1, 2):
        raise ValidationError(f"Only n in {{1, 2}} is supported, got {n}")
    if rho.dim ** n > config.measures.max_dimension:
        raise ValidationError(
            f"rho^(x){n} has dimension {rho.dim ** n}, above the solver limit {config.measures.max_dimension}"
        )
    certificate = one_shot_exact_cost(tensor_power(rho, n), config)
    return TensorPowerCost(
        n=n,
        e_kappa_per_copy=certificate.e_kappa / n,
        m=certificate.m,
        cost_per_copy=math.log2(certificate.m) / n,
        lower_per_copy=certificate.bounds.lower / n,
        upper_per_copy=certificate.bounds.upper / n,
    )
