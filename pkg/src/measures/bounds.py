"""One-shot exact cost sandwich from E_kappa"""

import math
from dataclasses import dataclass
from typing import Dict, Union

from ..errors import ValidationError

NEG_INF_LABEL = "-inf"


def format_bits(value: float, float_format: str = "%.9g") -> str:
    """Serialize a bit value; -inf becomes the literal '-inf'"""
    if math.isinf(value) and value < 0:
        return NEG_INF_LABEL
    return float_format % value


@dataclass(frozen=True)
class OneShotBounds:
    """log2(2^E - 1) <= one-shot cost <= log2(2^E + 2)"""

    lower: float
    upper: float

    @property
    def lower_unbounded(self) -> bool:
        return math.isinf(self.lower)

    def contains(self, bits: float, tol: float = 1e-6) -> bool:
        return (self.lower_unbounded or bits >= self.lower - tol) and bits <= self.upper + tol

    def to_dict(self) -> Dict[str, Union[float, str]]:
        return {
            "one_shot_lower": NEG_INF_LABEL if self.lower_unbounded else self.lower,
            "one_shot_upper": self.upper,
        }


def one_shot_bounds(e_kappa: float) -> OneShotBounds:
    """Sandwich bounds; the lower bound is -inf exactly when e_kappa = 0"""
    if e_kappa < 0 or math.isnan(e_kappa):
        raise ValidationError(f"e_kappa must be >= 0, got {e_kappa}")
    power = 2.0 ** e_kappa
    lower = -math.inf if e_kappa == 0 else math.log2(power - 1.0)
    return OneShotBounds(lower=lower, upper=math.log2(power + 2.0))
