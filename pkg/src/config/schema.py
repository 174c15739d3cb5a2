"""Pydantic models for configuration validation"""

from typing import Optional
from pydantic import BaseModel, Field, field_validator


class SolverConfig(BaseModel):
    """Settings for the interior-point SDP solver"""

    gap_tol: float = Field(default=1e-8, gt=0.0, description="Relative duality gap tolerance")
    feas_tol: float = Field(default=1e-8, gt=0.0, description="Relative primal/dual residual tolerance")
    infeas_tol: float = Field(default=1e-8, gt=0.0, description="Ratio test threshold for infeasibility rays")
    max_iter: int = Field(default=200, ge=1, description="Maximum interior-point iterations")
    step_fraction: float = Field(default=0.98, description="Fraction-to-boundary step factor")
    verbose: bool = Field(default=False, description="Print the per-iteration table")

    @field_validator("step_fraction")
    @classmethod
    def validate_step_fraction(cls, v: float) -> float:
        """Step fraction must lie strictly inside (0, 1)"""
        if not (0.0 < v < 1.0):
            raise ValueError(f"step_fraction must be in (0, 1), got {v}")
        return v


class MeasureConfig(BaseModel):
    """Tolerances for entanglement measures"""

    zero_clamp: float = Field(
        default=5e-7, ge=0.0,
        description="log2 values within this distance of 0 are reported as 0",
    )
    psd_tol: float = Field(default=1e-8, gt=0.0, description="Relative PSD tolerance for PPT tests")
    binegativity_tol: float = Field(default=1e-9, gt=0.0, description="PSD tolerance of the binegativity test")
    eig_zero_tol: float = Field(default=1e-12, ge=0.0, description="Eigenvalues below this are treated as 0")
    max_dimension: int = Field(default=100, ge=1, description="Largest total dimension handed to the solver")


class ChannelConfig(BaseModel):
    """Settings for the one-shot preparation search"""

    feasibility_threshold: float = Field(
        default=1e-8, gt=0.0,
        description="Optimal slack t at or below this value counts as feasible",
    )
    window_guard: float = Field(default=1e-6, ge=0.0, description="Rounding guard on the integer search window")
    certificate_tol: float = Field(default=1e-7, gt=0.0, description="Tolerance for certificate invariants")
    minimality_margin: float = Field(
        default=1e-6, gt=0.0,
        description="Slack t above this value certifies infeasibility of m-1",
    )


class SweepConfig(BaseModel):
    """Settings for parameter sweeps"""

    threads: Optional[int] = Field(
        default=None, ge=1,
        description="Worker threads (falls back to KAPPA_ENT_THREADS, then CPU count)",
    )
    float_format: str = Field(default="%.9g", description="printf-style float format for CSV output")


class CheckConfig(BaseModel):
    """Sizes and seeds of the property batteries"""

    seed: int = Field(default=2018, ge=0, description="Base seed for random states")
    twoqubit_count: int = Field(default=100, ge=1)
    faithfulness_count: int = Field(default=50, ge=1)
    monotonicity_count: int = Field(default=50, ge=1)
    duality_count: int = Field(default=10, ge=0, description="Random states added to the duality battery")
    tolerance: float = Field(default=1e-6, gt=0.0, description="Acceptance tolerance for closed-form values")


class ToolkitConfig(BaseModel):
    """Complete toolkit configuration"""

    solver: SolverConfig = Field(default_factory=SolverConfig)
    measures: MeasureConfig = Field(default_factory=MeasureConfig)
    channels: ChannelConfig = Field(default_factory=ChannelConfig)
    sweeps: SweepConfig = Field(default_factory=SweepConfig)
    checks: CheckConfig = Field(default_factory=CheckConfig)
