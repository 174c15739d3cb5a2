"""Named bipartite states and the parametric families built from them"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from ..errors import ValidationError
from ..linalg import BipartiteOperator, kron, kron_operators, partial_trace, permute_subsystems, require_hermitian

DENSITY_PSD_TOL = 1e-10
DENSITY_TRACE_TOL = 1e-10


def ket(dims: Sequence[int], amplitudes: Dict[Tuple[int, ...], complex]) -> np.ndarray:
    """Normalized vector from {(i, j, ...): amplitude} in the product basis"""
    vector = np.zeros(int(np.prod(dims)), dtype=complex)
    for index, amplitude in amplitudes.items():
        vector[np.ravel_multi_index(index, tuple(dims))] += amplitude
    return vector / np.linalg.norm(vector)


def projector(vector: np.ndarray) -> np.ndarray:
    return np.outer(vector, vector.conj())


def validate_density(
    rho: BipartiteOperator,
    psd_tol: float = DENSITY_PSD_TOL,
    trace_tol: float = DENSITY_TRACE_TOL,
    hermitian_tol: float = 1e-10,
    name: str = "state",
) -> BipartiteOperator:
    """Raise ValidationError unless rho is Hermitian, PSD and of unit trace"""
    require_hermitian(rho.matrix, name, hermitian_tol)
    trace = float(np.trace(rho.matrix).real)
    if abs(trace - 1.0) > trace_tol:
        raise ValidationError(f"{name} has trace {trace:.12g}, expected 1")
    lowest = float(np.linalg.eigvalsh((rho.matrix + rho.matrix.conj().T) / 2)[0])
    if lowest < -psd_tol:
        raise ValidationError(f"{name} is not PSD: lambda_min = {lowest:.3e}")
    return rho


def _require_probability(p: float, name: str) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"{name} parameter must lie in [0, 1], got {p}")
    return p


def max_entangled(d: int) -> BipartiteOperator:
    """Phi^d = (1/d) sum_ij |ii><jj|"""
    if d < 1:
        raise ValidationError(f"Schmidt rank must be >= 1, got {d}")
    vector = np.zeros(d * d, dtype=complex)
    vector[[i * d + i for i in range(d)]] = 1.0 / np.sqrt(d)
    return BipartiteOperator(projector(vector), d, d)


_V1 = ket((3, 3), {(0, 1): 1.0, (1, 0): -1.0})
_V2 = ket((3, 3), {(0, 2): 1.0, (2, 0): -1.0})
_U1 = ket((3, 3), {(0, 0): 1.0})
_U2 = ket((3, 3), {(0, 2): 1.0, (2, 0): 1.0})
_U3 = ket((3, 3), {(1, 2): 1.0, (2, 1): 1.0})
_W1 = ket((3, 3), {(0, 0): 1.0, (1, 2): 1.0, (2, 1): 1.0})
_W2 = _U2


def antisym_rank2() -> BipartiteOperator:
    """Rank-two two-qutrit state on the antisymmetric subspace, (|v1><v1| + |v2><v2|)/2"""
    return family_sigma(0.5)


def family_sigma(p: float) -> BipartiteOperator:
    """sigma_p = p |v1><v1| + (1-p) |v2><v2|, rank two"""
    p = _require_probability(p, "sigma")
    return BipartiteOperator(p * projector(_V1) + (1 - p) * projector(_V2), 3, 3)


def family_omega(p: float, u1: Optional[np.ndarray] = None) -> BipartiteOperator:
    """
    omega_p = (p/2)|u1><u1| + ((1-p)/2)|u2><u2| + (1/2)|u3><u3|, rank three.

    Args:
        p: Mixing parameter in [0, 1]
        u1: Alternative first ket (9 amplitudes); defaults to |00>
    """
    p = _require_probability(p, "omega")
    first = _U1 if u1 is None else np.asarray(u1, dtype=complex) / np.linalg.norm(u1)
    if first.shape != (9,):
        raise ValidationError(f"u1 must have 9 amplitudes, got shape {first.shape}")
    matrix = (p / 2) * projector(first) + ((1 - p) / 2) * projector(_U2) + 0.5 * projector(_U3)
    return BipartiteOperator(matrix, 3, 3)


def family_tau(p: float) -> BipartiteOperator:
    """tau_p = (3p/4)|w1><w1| + (3(1-p)/4)|w2><w2| + (1/4) I/9, full rank"""
    p = _require_probability(p, "tau")
    matrix = 0.75 * p * projector(_W1) + 0.75 * (1 - p) * projector(_W2) + np.eye(9) / 36
    return BipartiteOperator(matrix, 3, 3)


def convexity_trio() -> Tuple[BipartiteOperator, BipartiteOperator, BipartiteOperator]:
    """(Phi^2, (|00><00| + |11><11|)/2, their average)"""
    rho1 = max_entangled(2)
    classical = np.zeros((4, 4), dtype=complex)
    classical[0, 0] = classical[3, 3] = 0.5
    rho2 = BipartiteOperator(classical, 2, 2)
    return rho1, rho2, (rho1 + rho2) * 0.5


MONOGAMY_KET = ket((2, 2, 2), {(0, 0, 0): 0.5, (0, 1, 1): 0.5, (1, 1, 0): np.sqrt(2) / 2})


def monogamy_state() -> Tuple[BipartiteOperator, BipartiteOperator, BipartiteOperator]:
    """
    Cuts of |psi> = (|000> + |011> + sqrt(2)|110>)/2 on qubits A, B, C.

    Returns:
        (psi_A(BC) as 2 x 4, psi_AB = Tr_C, psi_AC = Tr_B)
    """
    pure = projector(MONOGAMY_KET)
    whole = BipartiteOperator(pure, 2, 4)
    ab = partial_trace(BipartiteOperator(pure, 4, 2), keep="A")
    acb = permute_subsystems(pure, [2, 2, 2], [0, 2, 1])
    ac = partial_trace(BipartiteOperator(acb, 4, 2), keep="A")
    return whole, BipartiteOperator(ab, 2, 2), BipartiteOperator(ac, 2, 2)


def product_state(sigma_a: np.ndarray, sigma_b: np.ndarray) -> BipartiteOperator:
    """sigma_a (x) sigma_b"""
    sigma_a, sigma_b = np.asarray(sigma_a), np.asarray(sigma_b)
    return BipartiteOperator(kron(sigma_a, sigma_b), sigma_a.shape[0], sigma_b.shape[0])


def isotropic_state(d: int, fidelity: float) -> BipartiteOperator:
    """f Phi^d + (1 - f)(I - Phi^d)/(d^2 - 1)"""
    if d < 2:
        raise ValidationError(f"Isotropic states need d >= 2, got {d}")
    f = _require_probability(fidelity, "isotropic")
    phi = max_entangled(d).matrix
    return BipartiteOperator(f * phi + (1 - f) * (np.eye(d * d) - phi) / (d * d - 1), d, d)


def mix_with_identity(rho: BipartiteOperator, weight: float) -> BipartiteOperator:
    """(1 - w) rho + w I/(d_A d_B)"""
    w = _require_probability(weight, "mixing")
    return rho.with_matrix((1 - w) * rho.matrix + w * np.eye(rho.dim) / rho.dim)


def tensor_power(rho: BipartiteOperator, n: int) -> BipartiteOperator:
    """rho^{(x) n} with all A factors grouped before all B factors"""
    if n < 1:
        raise ValidationError(f"Tensor power must be >= 1, got {n}")
    out = rho
    for _ in range(n - 1):
        out = kron_operators(out, rho)
    return out


@dataclass(frozen=True)
class StateFamily:
    """One-parameter family of density matrices over a closed interval"""

    name: str
    interval: Tuple[float, float]
    builder: Callable[[float], BipartiteOperator]

    def __call__(self, p: float) -> BipartiteOperator:
        lo, hi = self.interval
        if not lo <= p <= hi:
            raise ValidationError(f"{self.name} parameter {p} outside [{lo}, {hi}]")
        return self.builder(p)

    def grid(self, p_start: float, p_end: float, steps: int) -> np.ndarray:
        """Evenly spaced parameters; steps = 1 only for a degenerate range"""
        lo, hi = self.interval
        if not lo <= p_start <= p_end <= hi:
            raise ValidationError(
                f"Range [{p_start}, {p_end}] must satisfy {lo} <= start <= end <= {hi}"
            )
        if steps < 1:
            raise ValidationError(f"steps must be >= 1, got {steps}")
        if (steps == 1) != (p_start == p_end):
            raise ValidationError(
                "A single step requires p_start == p_end, and a degenerate range requires steps == 1"
            )
        return np.linspace(p_start, p_end, steps)


FAMILIES: Dict[str, StateFamily] = {
    "sigma": StateFamily("sigma", (0.0, 1.0), family_sigma),
    "omega": StateFamily("omega", (0.0, 1.0), family_omega),
    "tau": StateFamily("tau", (0.0, 1.0), family_tau),
}


def get_family(name: str) -> StateFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValidationError(f"Unknown state family {name!r}; choose from {sorted(FAMILIES)}") from None
