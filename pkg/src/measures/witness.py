"""Entanglement witnesses read off the dual kappa optimizers"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..config import ToolkitConfig
from ..errors import IntegrityFailure
from ..linalg import BipartiteOperator, kron
from ..states import random_pure_state
from .kappa import KappaSolution, solve_kappa

PPT_BATTERY_SEED = 7
PPT_BATTERY_RANDOM = 5


@dataclass
class WitnessResult:
    """Z = W - V with Tr[(Z + I) rho] = 1 - 2^{E_kappa}"""

    z: BipartiteOperator
    violation: float
    ppt_min_expectation: float
    kappa: KappaSolution

    @property
    def witness(self) -> BipartiteOperator:
        """Z + I, nonnegative on every PPT state"""
        return self.z.with_matrix(self.z.matrix + np.eye(self.z.dim))

    @property
    def detects(self) -> bool:
        return self.violation < 0.0


def ppt_battery(dim_a: int, dim_b: int, seed: int = PPT_BATTERY_SEED) -> List[np.ndarray]:
    """Maximally mixed state, product basis states and random product pure states"""
    states = [np.eye(dim_a * dim_b) / (dim_a * dim_b)]
    for index in range(dim_a * dim_b):
        basis = np.zeros((dim_a * dim_b, dim_a * dim_b), dtype=complex)
        basis[index, index] = 1.0
        states.append(basis)
    for k in range(PPT_BATTERY_RANDOM):
        local_a = random_pure_state(dim_a, 1, seed + 2 * k).matrix
        local_b = random_pure_state(dim_b, 1, seed + 2 * k + 1).matrix
        states.append(kron(local_a, local_b))
    return states


def extract_witness(
    rho: BipartiteOperator,
    config: Optional[ToolkitConfig] = None,
    kappa: Optional[KappaSolution] = None,
) -> WitnessResult:
    """
    Witness operator for rho from the dual optimizers V, W.

    Args:
        rho: Bipartite state
        config: Toolkit configuration
        kappa: Reuse an existing solve of rho instead of solving again

    Returns:
        WitnessResult; violation < 0 iff rho is NPT

    Raises:
        IntegrityFailure: If Z + I has a negative expectation on a PPT state
    """
    config = config or ToolkitConfig()
    kappa = kappa or solve_kappa(rho, config)
    z = kappa.w - kappa.v
    shifted = z.matrix + np.eye(rho.dim)
    violation = float(np.trace(shifted @ rho.matrix).real)
    if abs(violation) <= config.checks.tolerance:
        violation = 0.0

    expectations = [float(np.trace(shifted @ sigma).real) for sigma in ppt_battery(rho.dim_a, rho.dim_b)]
    lowest = min(expectations)
    if lowest < -config.channels.certificate_tol:
        raise IntegrityFailure(
            f"Witness takes negative value {lowest:.3e} on a PPT state",
            {"ppt_min_expectation": lowest, "violation": violation},
        )
    return WitnessResult(z=z, violation=violation, ppt_min_expectation=lowest, kappa=kappa)
