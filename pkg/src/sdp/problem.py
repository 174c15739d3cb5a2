"""Block-diagonal SDPs in equality standard form

    primal:  min <C, X>  s.t.  <A_k, X> = b_k,  X = diag(X_1, ..., X_r) >= 0
    dual:    max b.y     s.t.  C - sum_k y_k A_k = Z >= 0

Constraint matrices are stored per block as padded coordinate slots
(rows, cols, vals of shape (m, t)). Every symmetric entry appears
explicitly, both (p, q) and (q, p).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

import numpy as np

from ..errors import ValidationError

logger = logging.getLogger(__name__)

Triplet = Tuple[int, int, float]
BlockTerm = Union[np.ndarray, Sequence[Triplet]]

# Constraints with more nonzeros than this per block take the dense Schur path
SPARSE_SLOT_LIMIT = 8
SYMMETRY_TOL = 1e-12


class SolverStatus(enum.Enum):
    """Possible statuses of an SDP solve"""

    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    MAX_ITERATIONS = "MaxIterations"
    NUMERICAL_FAILURE = "NumericalFailure"


@dataclass(frozen=True, eq=False)
class BlockConstraints:
    """Coordinate slots of every constraint restricted to one block"""

    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray
    sparse_idx: np.ndarray
    dense_idx: np.ndarray
    sparse_slots: int

    @property
    def slots(self) -> int:
        return self.vals.shape[1]


@dataclass(frozen=True, eq=False)
class SdpProblem:
    """min <C, X> s.t. A(X) = b, X >= 0 over a block-diagonal cone"""

    sides: Tuple[int, ...]
    objective: Tuple[np.ndarray, ...]
    constraints: Tuple[BlockConstraints, ...]
    rhs: np.ndarray
    labels: Tuple[str, ...] = ()

    @property
    def num_constraints(self) -> int:
        return int(self.rhs.shape[0])

    @property
    def cone_order(self) -> int:
        """Sum of block sides (the barrier parameter)"""
        return int(sum(self.sides))

    @property
    def cone_dimension(self) -> int:
        return int(sum(s * (s + 1) // 2 for s in self.sides))

    def apply(self, blocks: Sequence[np.ndarray]) -> np.ndarray:
        """A(X): the vector of <A_k, X>"""
        out = np.zeros(self.num_constraints)
        for block, con in zip(blocks, self.constraints):
            if con.slots:
                out += np.sum(con.vals * block[con.rows, con.cols], axis=1)
        return out

    def adjoint(self, y: np.ndarray) -> List[np.ndarray]:
        """A^T(y) = sum_k y_k A_k, per block"""
        out = []
        for side, con in zip(self.sides, self.constraints):
            block = np.zeros((side, side))
            if con.slots:
                np.add.at(block, (con.rows.ravel(), con.cols.ravel()), (con.vals * y[:, None]).ravel())
            out.append(block)
        return out

    def objective_value(self, blocks: Sequence[np.ndarray]) -> float:
        return float(sum(np.vdot(c, x).real for c, x in zip(self.objective, blocks)))

    def dense_constraint(self, k: int, block: int) -> np.ndarray:
        """A_k restricted to one block as a dense matrix"""
        side = self.sides[block]
        con = self.constraints[block]
        out = np.zeros((side, side))
        if con.slots:
            np.add.at(out, (con.rows[k], con.cols[k]), con.vals[k])
        return out

    def schur_complement(self, scalings: Sequence[np.ndarray]) -> np.ndarray:
        """M_kl = sum over blocks of <A_k, W A_l W>"""
        m = self.num_constraints
        schur = np.zeros((m, m))
        for block, (w, con) in enumerate(zip(scalings, self.constraints)):
            if not con.slots:
                continue
            s_idx, d_idx = con.sparse_idx, con.dense_idx
            if s_idx.size and con.sparse_slots:
                t = con.sparse_slots
                rows = con.rows[s_idx, :t]
                cols = con.cols[s_idx, :t]
                vals = con.vals[s_idx, :t]
                part = np.zeros((s_idx.size, s_idx.size))
                for i in range(t):
                    for j in range(t):
                        part += (
                            np.outer(vals[:, i], vals[:, j])
                            * w[rows[:, i][:, None], rows[:, j][None, :]]
                            * w[cols[:, j][None, :], cols[:, i][:, None]]
                        )
                schur[np.ix_(s_idx, s_idx)] += part
            if d_idx.size:
                columns = np.empty((m, d_idx.size))
                for pos, k in enumerate(d_idx):
                    scaled = w @ self.dense_constraint(k, block) @ w
                    columns[:, pos] = np.sum(con.vals * scaled[con.rows, con.cols], axis=1)
                schur[:, d_idx] += columns
                if s_idx.size:
                    schur[np.ix_(d_idx, s_idx)] += columns[s_idx, :].T
        return (schur + schur.T) / 2


class ProblemBuilder:
    """
    Incremental assembly of an SdpProblem.

    Constraint terms are given per block either as a dense symmetric
    matrix or as (row, col, value) triplets listing both symmetric entries.
    """

    def __init__(self, sides: Sequence[int]):
        if not sides or any(int(s) < 1 for s in sides):
            raise ValidationError(f"Block sides must be positive, got {list(sides)}")
        self.sides = tuple(int(s) for s in sides)
        self._objective = [np.zeros((s, s)) for s in self.sides]
        self._terms: List[Dict[int, List[Triplet]]] = []
        self._rhs: List[float] = []
        self._labels: List[str] = []

    def set_objective(self, block: int, matrix: np.ndarray) -> "ProblemBuilder":
        matrix = np.asarray(matrix, dtype=float)
        side = self.sides[block]
        if matrix.shape != (side, side):
            raise ValidationError(f"Objective block {block} must be {side}x{side}, got {matrix.shape}")
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=SYMMETRY_TOL * (1.0 + np.max(np.abs(matrix)))):
            raise ValidationError(f"Objective block {block} is not symmetric")
        self._objective[block] = (matrix + matrix.T) / 2
        return self

    def add_constraint(self, terms: Mapping[int, BlockTerm], rhs: float, label: str = "") -> int:
        """Append <A_k, X> = rhs and return k"""
        entries: Dict[int, List[Triplet]] = {}
        for block, term in terms.items():
            if not 0 <= block < len(self.sides):
                raise ValidationError(f"Constraint refers to unknown block {block}")
            triplets = _as_triplets(term, self.sides[block])
            _require_symmetric_triplets(triplets, block)
            if triplets:
                entries[block] = triplets
        self._terms.append(entries)
        self._rhs.append(float(rhs))
        self._labels.append(label)
        return len(self._rhs) - 1

    def build(self) -> SdpProblem:
        m = len(self._rhs)
        blocks = []
        for block in range(len(self.sides)):
            counts = [len(t.get(block, ())) for t in self._terms]
            slots = max(counts, default=0)
            rows = np.zeros((m, slots), dtype=np.intp)
            cols = np.zeros((m, slots), dtype=np.intp)
            vals = np.zeros((m, slots))
            for k, term in enumerate(self._terms):
                for pos, (r, c, v) in enumerate(term.get(block, ())):
                    rows[k, pos], cols[k, pos], vals[k, pos] = r, c, v
            counts_arr = np.asarray(counts, dtype=int)
            dense = counts_arr > SPARSE_SLOT_LIMIT
            sparse_idx = np.flatnonzero(~dense & (counts_arr > 0))
            dense_idx = np.flatnonzero(dense)
            sparse_slots = int(counts_arr[sparse_idx].max()) if sparse_idx.size else 0
            blocks.append(BlockConstraints(rows, cols, vals, sparse_idx, dense_idx, sparse_slots))

        problem = SdpProblem(
            sides=self.sides,
            objective=tuple(self._objective),
            constraints=tuple(blocks),
            rhs=np.asarray(self._rhs, dtype=float),
            labels=tuple(self._labels),
        )
        if problem.num_constraints > problem.cone_dimension:
            logger.warning(
                "Problem has %d constraints for a cone of dimension %d",
                problem.num_constraints, problem.cone_dimension,
            )
        return problem


def _as_triplets(term: BlockTerm, side: int) -> List[Triplet]:
    if isinstance(term, np.ndarray):
        if term.shape != (side, side):
            raise ValidationError(f"Constraint block must be {side}x{side}, got {term.shape}")
        rows, cols = np.nonzero(term)
        return [(int(r), int(c), float(term[r, c])) for r, c in zip(rows, cols)]
    triplets = []
    for r, c, v in term:
        if not (0 <= r < side and 0 <= c < side):
            raise ValidationError(f"Entry ({r}, {c}) outside a {side}x{side} block")
        if v != 0.0:
            triplets.append((int(r), int(c), float(v)))
    return triplets


def _require_symmetric_triplets(triplets: List[Triplet], block: int) -> None:
    merged: Dict[Tuple[int, int], float] = {}
    for r, c, v in triplets:
        merged[(r, c)] = merged.get((r, c), 0.0) + v
    for (r, c), v in merged.items():
        if abs(merged.get((c, r), 0.0) - v) > SYMMETRY_TOL * (1.0 + abs(v)):
            raise ValidationError(f"Constraint coefficients on block {block} are not symmetric at ({r}, {c})")


@dataclass
class SdpSolution:
    """Result of an interior-point solve"""

    status: SolverStatus
    x: List[np.ndarray]
    y: np.ndarray
    z: List[np.ndarray]
    primal_objective: float
    dual_objective: float
    gap: float
    primal_residual: float
    dual_residual: float
    iterations: int
    message: str = ""
    stats: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def is_optimal(self) -> bool:
        return self.status is SolverStatus.OPTIMAL

    @property
    def relative_gap(self) -> float:
        return self.gap / (1.0 + abs(self.primal_objective))

    def summary(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "primal_objective": float(self.primal_objective),
            "dual_objective": float(self.dual_objective),
            "gap": float(self.gap),
            "primal_residual": float(self.primal_residual),
            "dual_residual": float(self.dual_residual),
            "iterations": int(self.iterations),
            "message": self.message,
        }


def triplets_of(problem: SdpProblem, k: int, block: int) -> List[Triplet]:
    """Nonzero coordinate entries of A_k on one block"""
    con = problem.constraints[block]
    if not con.slots:
        return []
    mask = con.vals[k] != 0.0
    return [
        (int(r), int(c), float(v))
        for r, c, v in zip(con.rows[k][mask], con.cols[k][mask], con.vals[k][mask])
    ]

