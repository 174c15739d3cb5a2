"""State references on the command line and the JSON state file format"""

import json
from pathlib import Path
from typing import List, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationInfo, field_validator

from src.errors import ValidationError
from src.linalg import BipartiteOperator
from src.states import (
    antisym_rank2,
    convexity_trio,
    get_family,
    max_entangled,
    monogamy_state,
    validate_density,
)

FILE_HERMITIAN_TOL = 1e-10
FILE_PSD_TOL = 1e-8
FILE_TRACE_TOL = 1e-8


class StateFile(BaseModel):
    """Matrix on C^dimA (x) C^dimB as separate row-major real and imaginary parts"""

    dimA: int = Field(ge=1)
    dimB: int = Field(ge=1)
    re: List[List[float]]
    im: List[List[float]]

    @field_validator("re", "im")
    @classmethod
    def validate_shape(cls, v: List[List[float]], info: ValidationInfo) -> List[List[float]]:
        """Both parts must be (dimA dimB) x (dimA dimB)"""
        dim_a, dim_b = info.data.get("dimA"), info.data.get("dimB")
        if dim_a is None or dim_b is None:
            return v
        side = dim_a * dim_b
        if len(v) != side or any(len(row) != side for row in v):
            raise ValueError(f"{info.field_name} must be {side}x{side}")
        return v

    def to_matrix(self) -> np.ndarray:
        return np.asarray(self.re, dtype=float) + 1j * np.asarray(self.im, dtype=float)

    def to_operator(self) -> BipartiteOperator:
        return BipartiteOperator(self.to_matrix(), self.dimA, self.dimB)

    @classmethod
    def from_operator(cls, op: BipartiteOperator) -> "StateFile":
        return cls(dimA=op.dim_a, dimB=op.dim_b, re=op.matrix.real.tolist(), im=op.matrix.imag.tolist())


def load_state_file(path: Union[str, Path]) -> BipartiteOperator:
    """
    Read and validate a density matrix from a state file.

    Raises:
        ValidationError: If the file is missing, malformed or not a density matrix
    """
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"State file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
        state = StateFile.model_validate(payload)
    except (json.JSONDecodeError, ValueError) as e:
        raise ValidationError(f"Invalid state file {path}: {e}") from e
    return validate_density(
        state.to_operator(),
        psd_tol=FILE_PSD_TOL,
        trace_tol=FILE_TRACE_TOL,
        hermitian_tol=FILE_HERMITIAN_TOL,
        name=str(path),
    )


def save_state_file(op: BipartiteOperator, path: Union[str, Path]) -> Path:
    """Write any operator in the state file layout (no density-matrix check)"""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(StateFile.from_operator(op).model_dump(), f, indent=2)
    return path


def _parameter(ref: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ValidationError(f"Bad parameter in state reference {ref!r}") from None


def resolve_state(ref: str) -> BipartiteOperator:
    """
    Built-in name or a path to a state file.

    Built-ins: phi:d, rho_v, sigma:p, omega:p, tau:p, convexity:{1,2,avg},
    monogamy:{ab,ac,abc}.
    """
    name, _, arg = ref.partition(":")
    if name == "phi" and arg:
        try:
            d = int(arg)
        except ValueError:
            raise ValidationError(f"phi needs an integer Schmidt rank, got {arg!r}") from None
        return max_entangled(d)
    if name == "rho_v" and not arg:
        return antisym_rank2()
    if name in ("sigma", "omega", "tau") and arg:
        return get_family(name)(_parameter(ref, arg))
    if name == "convexity":
        trio = dict(zip(("1", "2", "avg"), convexity_trio()))
        if arg in trio:
            return trio[arg]
    if name == "monogamy":
        cuts = dict(zip(("abc", "ab", "ac"), monogamy_state()))
        if arg in cuts:
            return cuts[arg]

    path = Path(ref)
    if path.suffix.lower() == ".json" or path.exists():
        return load_state_file(path)
    raise ValidationError(
        f"Unknown state reference {ref!r}; use phi:d, rho_v, sigma:p, omega:p, tau:p, "
        "convexity:{1,2,avg}, monogamy:{ab,ac,abc} or a state file path"
    )
