"""Entanglement measures: E_kappa, logarithmic negativity, Z bound and witnesses"""

from .additivity import AdditivityResult, additivity_check
from .bounds import NEG_INF_LABEL, OneShotBounds, format_bits, one_shot_bounds
from .kappa import (
    KappaSolution,
    clamp_bits,
    e_kappa,
    e_kappa_dual,
    e_kappa_primal,
    kappa_program,
    require_state,
    solve_kappa,
)
from .negativity import binegativity_holds, binegativity_operator, is_ppt, log_negativity, z_bound
from .report import IrreversibilityChain, MeasureReport, irreversibility_chain, measure_state
from .witness import WitnessResult, extract_witness, ppt_battery

__all__ = [
    "AdditivityResult",
    "IrreversibilityChain",
    "KappaSolution",
    "MeasureReport",
    "NEG_INF_LABEL",
    "OneShotBounds",
    "WitnessResult",
    "additivity_check",
    "binegativity_holds",
    "binegativity_operator",
    "clamp_bits",
    "e_kappa",
    "e_kappa_dual",
    "e_kappa_primal",
    "extract_witness",
    "format_bits",
    "irreversibility_chain",
    "is_ppt",
    "kappa_program",
    "log_negativity",
    "measure_state",
    "one_shot_bounds",
    "ppt_battery",
    "require_state",
    "solve_kappa",
    "z_bound",
]
