"""Property batteries over the measures and channels"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..channels import isotropic_twirl, one_shot_exact_cost
from ..config import ToolkitConfig
from ..errors import ValidationError
from ..linalg import BipartiteOperator, min_eigenvalue, partial_transpose
from ..measures import (
    additivity_check,
    binegativity_holds,
    extract_witness,
    irreversibility_chain,
    is_ppt,
    log_negativity,
    solve_kappa,
    z_bound,
)
from ..states import (
    antisym_rank2,
    convexity_trio,
    family_omega,
    family_sigma,
    family_tau,
    max_entangled,
    mix_with_identity,
    monogamy_state,
    random_state,
)

logger = logging.getLogger(__name__)

LOG2_3_2 = math.log2(1.5)
PPT_MIX_OVERSHOOT = 0.05
NPT_MARGIN = 1e-3


@dataclass
class Outcome:
    """One assertion of a battery"""

    name: str
    passed: bool
    value: Optional[float] = None
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    outcomes: List[Outcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> List[Outcome]:
        return [o for o in self.outcomes if not o.passed]


def _close(name: str, value: float, expected: float, tol: float) -> Outcome:
    return Outcome(name, abs(value - expected) <= tol, value, f"expected {expected:.9g} (tol {tol:g})")


def _at_least(name: str, value: float, bound: float, detail: str = "") -> Outcome:
    return Outcome(name, value >= bound, value, detail or f"must be >= {bound:.3g}")


def _named_states() -> List[Tuple[str, BipartiteOperator]]:
    rho1, rho2, average = convexity_trio()
    whole, ab, ac = monogamy_state()
    return [
        ("phi:2", max_entangled(2)),
        ("phi:3", max_entangled(3)),
        ("phi:4", max_entangled(4)),
        ("rho_v", antisym_rank2()),
        ("convexity:1", rho1),
        ("convexity:2", rho2),
        ("convexity:avg", average),
        ("monogamy:abc", whole),
        ("monogamy:ab", ab),
        ("monogamy:ac", ac),
        ("sigma:0.3", family_sigma(0.3)),
        ("omega:0.3", family_omega(0.3)),
        ("tau:0.3", family_tau(0.3)),
    ]


def _random_battery(config: ToolkitConfig, count: int, shapes=((2, 3), (3, 3), (2, 4))):
    seed = config.checks.seed
    for k in range(count):
        dim_a, dim_b = shapes[k % len(shapes)]
        rank = 1 + k % (dim_a * dim_b)
        yield f"random:{dim_a}x{dim_b}:rank{rank}:seed{seed + k}", random_state(dim_a, dim_b, rank, seed + k)


def check_duality(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    states = _named_states() + list(_random_battery(config, config.checks.duality_count))
    outcomes = []
    for name, rho in states:
        kappa = solve_kappa(rho, config)
        outcomes.append(Outcome(
            f"primal = dual on {name}", kappa.gap <= tol, kappa.gap,
            f"primal {kappa.e_kappa_primal:.9f}, dual {kappa.e_kappa_dual:.9f}",
        ))
    return outcomes


def check_additivity(config: ToolkitConfig) -> List[Outcome]:
    phi2 = max_entangled(2)
    rho_v = antisym_rank2()
    _, ppt, _ = convexity_trio()
    outcomes = []
    for name, left, right, expected in (
        ("phi:2 x phi:2", phi2, phi2, 2.0),
        ("rho_v x phi:2", rho_v, phi2, 2.0),
        ("rho_v x PPT", rho_v, ppt, 1.0),
    ):
        result = additivity_check(left, right, config)
        outcomes.append(_close(f"E_kappa({name})", result.lhs, expected, 1e-5))
        outcomes.append(Outcome(f"additive on {name}", result.gap <= 1e-5, result.gap, f"rhs {result.rhs:.9f}"))
    return outcomes


def _ppt_by_mixing(rho: BipartiteOperator) -> Tuple[BipartiteOperator, float]:
    """Mix toward I/d just past the point where the partial transpose turns PSD"""
    lowest = min_eigenvalue(partial_transpose(rho).matrix)
    if lowest >= 0:
        return rho, 0.0
    boundary = -lowest / (1.0 / rho.dim - lowest)
    weight = min(1.0, boundary + (1.0 - boundary) * PPT_MIX_OVERSHOOT)
    return mix_with_identity(rho, weight), weight


def check_faithfulness(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    psd_tol = config.measures.psd_tol
    seed = config.checks.seed
    count = config.checks.faithfulness_count
    outcomes = []
    for k in range(count):
        dim_a, dim_b = ((2, 2), (2, 3), (3, 3))[k % 3]
        mixed, weight = _ppt_by_mixing(random_state(dim_a, dim_b, 1 + k % 3, seed + 1000 + k))
        value = solve_kappa(mixed, config).e_kappa_primal
        ppt = is_ppt(mixed, psd_tol)
        outcomes.append(Outcome(
            f"PPT mixture #{k} ({dim_a}x{dim_b}, w={weight:.3f}) has E_kappa = 0",
            ppt and value <= tol, value,
        ))

    drawn, attempt = 0, 0
    while drawn < count and attempt < 20 * count:
        dim_a, dim_b = ((2, 2), (2, 3), (3, 3))[attempt % 3]
        rho = random_state(dim_a, dim_b, 1 + attempt % 2, seed + 5000 + attempt)
        attempt += 1
        if min_eigenvalue(partial_transpose(rho).matrix) > -NPT_MARGIN:
            continue
        witness = extract_witness(rho, config)
        value = witness.kappa.e_kappa_primal
        outcomes.append(Outcome(
            f"NPT state #{drawn} ({dim_a}x{dim_b}) has E_kappa > 0 and a violated witness",
            value >= 1e-4 and witness.violation < 0 and not is_ppt(rho, psd_tol), value,
            f"violation {witness.violation:.6f}",
        ))
        drawn += 1
    if drawn < count:
        outcomes.append(Outcome("enough NPT samples", False, float(drawn), f"only {drawn} of {count}"))
    return outcomes


def check_monotonicity(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    outcomes = []
    for k in range(config.checks.monotonicity_count):
        d = 2 + k % 2
        rho = random_state(d, d, 1 + k % (d * d), config.checks.seed + 2000 + k)
        before = solve_kappa(rho, config).e_kappa_primal
        after = solve_kappa(isotropic_twirl(rho), config).e_kappa_primal
        outcomes.append(Outcome(
            f"twirl does not increase E_kappa (#{k}, d={d})", after <= before + tol, after - before,
            f"{before:.6f} -> {after:.6f}",
        ))
    return outcomes


def check_convexity(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    rho1, rho2, average = convexity_trio()
    e1, e2, e_avg = (solve_kappa(r, config).e_kappa_primal for r in (rho1, rho2, average))
    margin = e_avg - (e1 + e2) / 2
    return [
        _close("E_kappa(rho1)", e1, 1.0, tol),
        _close("E_kappa(rho2)", e2, 0.0, tol),
        _close("E_kappa(average)", e_avg, LOG2_3_2, tol),
        _close("convexity margin", margin, LOG2_3_2 - 0.5, tol),
        _at_least("convexity violated", margin, tol),
    ]


def check_monogamy(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    whole, ab, ac = monogamy_state()
    e_whole, e_ab, e_ac = (solve_kappa(r, config).e_kappa_primal for r in (whole, ab, ac))
    margin = e_ab + e_ac - e_whole
    return [
        _close("E_kappa(psi_A(BC))", e_whole, 1.0, tol),
        _close("E_kappa(psi_AB)", e_ab, LOG2_3_2, tol),
        _close("E_kappa(psi_AC)", e_ac, LOG2_3_2, tol),
        _close("monogamy margin", margin, 2 * LOG2_3_2 - 1, tol),
        _at_least("monogamy violated", margin, tol),
    ]


def check_twoqubit(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    outcomes = []
    for k in range(config.checks.twoqubit_count):
        rho = random_state(2, 2, 4, config.checks.seed + 3000 + k)
        e_k = solve_kappa(rho, config).e_kappa_primal
        e_n = log_negativity(rho)
        outcomes.append(Outcome(
            f"two-qubit #{k}: E_kappa = E_N",
            abs(e_k - e_n) <= tol and binegativity_holds(rho, config.measures.binegativity_tol),
            e_k - e_n,
        ))
    return outcomes


def check_sandwich(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    states = _named_states() + list(_random_battery(config, 9))
    outcomes = []
    for name, rho in states:
        e_k = solve_kappa(rho, config).e_kappa_primal
        e_n = log_negativity(rho)
        log2_z = z_bound(rho, config.measures.eig_zero_tol)
        cap = math.log2(min(rho.dims))
        outcomes.append(Outcome(
            f"E_N <= E_kappa <= log2 Z on {name}",
            e_n <= e_k + tol and e_k <= log2_z + tol and e_k <= cap + tol, e_k,
            f"E_N {e_n:.6f}, log2 Z {log2_z:.6f}, log2 min(d) {cap:.6f}",
        ))
        if binegativity_holds(rho, config.measures.binegativity_tol, config.measures.eig_zero_tol):
            outcomes.append(_close(f"binegativity forces E_kappa = E_N on {name}", e_k, e_n, tol))
    return outcomes


def check_oneshot(config: ToolkitConfig) -> List[Outcome]:
    _, ppt, _ = convexity_trio()
    outcomes = []
    for name, rho, expected in (
        ("phi:2", max_entangled(2), 2),
        ("phi:3", max_entangled(3), 3),
        ("phi:4", max_entangled(4), 4),
        ("rho_v", antisym_rank2(), 2),
        ("convexity:2", ppt, 1),
    ):
        certificate = one_shot_exact_cost(rho, config)
        problems = certificate.failures(
            config.channels.certificate_tol, config.channels.minimality_margin, config.measures.psd_tol
        )
        outcomes.append(Outcome(
            f"one-shot cost of {name} is log2 {expected}",
            certificate.m == expected and not problems, float(certificate.m),
            "; ".join(problems) or f"choi min {certificate.cp_lambda_min:.2e}, ppt min {certificate.pptp_lambda_min:.2e}",
        ))
    return outcomes


def check_irreversibility(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    chain = irreversibility_chain(antisym_rank2(), config)
    return [
        _close("E_N(rho_v)", chain["e_n"], math.log2(1 + 1 / math.sqrt(2)), tol),
        _close("E_kappa(rho_v)", chain["e_kappa"], 1.0, tol),
        _close("log2 Z(rho_v)", chain["log2_z"], math.log2(1 + 13 / (4 * math.sqrt(2))), tol),
        Outcome("E_N < E_kappa < log2 Z on rho_v", chain["strict"]),
    ]


def check_separation(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    outcomes = []
    for p in np.round(np.arange(0.1, 0.95, 0.1), 10):
        rho = family_sigma(float(p))
        gap = solve_kappa(rho, config).e_kappa_primal - log_negativity(rho)
        outcomes.append(_at_least(f"E_kappa - E_N on sigma:{p:.1f}", gap, 1e-4))
    for p in (0.0, 1.0):
        rho = family_sigma(p)
        gap = solve_kappa(rho, config).e_kappa_primal - log_negativity(rho)
        outcomes.append(_close(f"E_kappa - E_N on sigma:{p:.0f}", gap, 0.0, tol))
    return outcomes


def check_witness(config: ToolkitConfig) -> List[Outcome]:
    tol = config.checks.tolerance
    rho1, rho2, average = convexity_trio()
    outcomes = []
    for name, rho, expected in (
        ("phi:2", rho1, -1.0),
        ("convexity:2", rho2, 0.0),
        ("convexity:avg", average, -0.5),
        ("rho_v", antisym_rank2(), -1.0),
    ):
        result = extract_witness(rho, config)
        outcomes.append(_close(f"witness violation on {name}", result.violation, expected, tol))
        outcomes.append(_at_least(f"witness nonnegative on PPT battery ({name})", result.ppt_min_expectation, -tol))
    return outcomes


SUITES: Dict[str, Callable[[ToolkitConfig], List[Outcome]]] = {
    "duality": check_duality,
    "additivity": check_additivity,
    "faithfulness": check_faithfulness,
    "monotonicity": check_monotonicity,
    "convexity": check_convexity,
    "monogamy": check_monogamy,
    "twoqubit": check_twoqubit,
    "sandwich": check_sandwich,
    "oneshot": check_oneshot,
    "irreversibility": check_irreversibility,
    "separation": check_separation,
    "witness": check_witness,
}


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, config: Optional[ToolkitConfig] = None) -> List[SuiteResult]:
    """
    Run one battery, or every battery for "all".

    Raises:
        ValidationError: For an unknown suite name
    """
    config = config or ToolkitConfig()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValidationError(f"Unknown suite {name!r}; choose from {suite_names()}")
    results = []
    for suite in names:
        logger.info("Running %s battery", suite)
        results.append(SuiteResult(suite, SUITES[suite](config)))
    return results
