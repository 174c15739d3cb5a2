"""Exact state preparation under PPT-preserving channels and the isotropic twirl"""

from .preparation import (
    ChoiVerification,
    FeasibilityResult,
    PreparationCertificate,
    choi_matrix,
    feasibility_G,
    feasibility_program,
    measure_prepare_apply,
    one_shot_exact_cost,
    ppt_choi,
    search_window,
    solve_feasibility,
    verify_choi,
)
from .regularization import TensorPowerCost, tensor_power_cost
from .twirl import isotropic_twirl

__all__ = [
    "ChoiVerification",
    "FeasibilityResult",
    "PreparationCertificate",
    "TensorPowerCost",
    "choi_matrix",
    "feasibility_G",
    "feasibility_program",
    "isotropic_twirl",
    "measure_prepare_apply",
    "one_shot_exact_cost",
    "ppt_choi",
    "search_window",
    "solve_feasibility",
    "tensor_power_cost",
    "verify_choi",
]
