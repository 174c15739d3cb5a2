"""Parameter sweeps over the named state families"""

import logging
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, TypedDict, Union

import pandas as pd

from ..config import ToolkitConfig
from ..errors import ValidationError
from ..measures import log_negativity, solve_kappa, z_bound
from ..states import get_family

logger = logging.getLogger(__name__)

THREADS_ENV = "KAPPA_ENT_THREADS"
COLUMNS = ["family", "p", "e_kappa", "e_n", "log2_z", "gap"]


class SweepRecord(TypedDict):
    family: str
    p: float
    e_kappa: float  # bits
    e_n: float  # bits
    log2_z: float  # bits
    gap: float  # e_kappa - e_n


def resolve_threads(config: ToolkitConfig) -> int:
    """Config value, else KAPPA_ENT_THREADS, else the CPU count"""
    if config.sweeps.threads is not None:
        return config.sweeps.threads
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValidationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
        return value
    return os.cpu_count() or 1


def measure_point(family: str, p: float, config: ToolkitConfig) -> SweepRecord:
    rho = get_family(family)(p)
    e_kappa = solve_kappa(rho, config).e_kappa_primal
    e_n = log_negativity(rho)
    return SweepRecord(
        family=family,
        p=float(p),
        e_kappa=e_kappa,
        e_n=e_n,
        log2_z=z_bound(rho, config.measures.eig_zero_tol),
        gap=e_kappa - e_n,
    )


def run_sweep(
    family: str,
    p_start: float,
    p_end: float,
    steps: int,
    config: Optional[ToolkitConfig] = None,
) -> pd.DataFrame:
    """
    Measure a family on an even grid of p.

    Args:
        family: One of sigma, omega, tau
        p_start: First grid point
        p_end: Last grid point
        steps: Number of grid points (1 only when p_start == p_end)
        config: Toolkit configuration

    Returns:
        DataFrame with columns family, p, e_kappa, e_n, log2_z, gap in grid order
    """
    config = config or ToolkitConfig()
    grid = get_family(family).grid(p_start, p_end, steps)
    workers = min(resolve_threads(config), len(grid))
    logger.info("Sweeping %s over %d points with %d threads", family, len(grid), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        records = list(pool.map(lambda p: measure_point(family, float(p), config), grid))
    return pd.DataFrame.from_records(records, columns=COLUMNS)


def write_csv_atomic(frame: pd.DataFrame, path: Union[str, Path], float_format: str = "%.9g") -> Path:
    """Write next to the target, then rename over it"""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    if not directory.is_dir():
        raise ValidationError(f"Output directory does not exist: {directory}")
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            frame.to_csv(handle, index=False, float_format=float_format, lineterminator="\n")
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    return path
