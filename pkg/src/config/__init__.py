"""Configuration system for the toolkit"""

from .schema import (
    ToolkitConfig,
    SolverConfig,
    MeasureConfig,
    ChannelConfig,
    SweepConfig,
    CheckConfig,
)
from .loader import load_config, default_config, with_overrides

__all__ = [
    "ToolkitConfig",
    "SolverConfig",
    "MeasureConfig",
    "ChannelConfig",
    "SweepConfig",
    "CheckConfig",
    "load_config",
    "default_config",
    "with_overrides",
]
