"""Configuration loader for YAML/JSON files"""

import json
import yaml
from pathlib import Path
from typing import Any, Dict, Optional, Union
from .schema import ToolkitConfig


def default_config() -> ToolkitConfig:
    """Configuration with every field at its default"""
    return ToolkitConfig()


def load_config(config_path: Union[str, Path]) -> ToolkitConfig:
    """
    Load and validate configuration from YAML or JSON file.

    Args:
        config_path: Path to configuration file

    Returns:
        Validated ToolkitConfig instance

    Raises:
        FileNotFoundError: If config file doesn't exist
        ValueError: If config is invalid
    """
    config_path = Path(config_path)

    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        if config_path.suffix.lower() in [".yaml", ".yml"]:
            config_data = yaml.safe_load(f)
        elif config_path.suffix.lower() == ".json":
            config_data = json.load(f)
        else:
            raise ValueError(
                f"Unsupported config file format: {config_path.suffix}. "
                "Use .yaml, .yml, or .json"
            )

    return ToolkitConfig(**(config_data or {}))


def with_overrides(
    config: ToolkitConfig,
    gap_tol: Optional[float] = None,
    feas_tol: Optional[float] = None,
    seed: Optional[int] = None,
) -> ToolkitConfig:
    """Apply command-line overrides on top of a loaded configuration"""
    solver_update: Dict[str, Any] = {}
    if gap_tol is not None:
        solver_update["gap_tol"] = gap_tol
    if feas_tol is not None:
        solver_update["feas_tol"] = feas_tol

    update: Dict[str, Any] = {}
    if solver_update:
        # Re-validate through the model so bad CLI values are rejected
        update["solver"] = type(config.solver)(**{**config.solver.model_dump(), **solver_update})
    if seed is not None:
        update["checks"] = type(config.checks)(**{**config.checks.model_dump(), "seed": seed})

    return config.model_copy(update=update) if update else config
