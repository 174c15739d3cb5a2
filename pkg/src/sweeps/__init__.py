"""Parameter sweeps and CSV output"""

from .runner import COLUMNS, THREADS_ENV, SweepRecord, measure_point, resolve_threads, run_sweep, write_csv_atomic

__all__ = [
    "COLUMNS",
    "THREADS_ENV",
    "SweepRecord",
    "measure_point",
    "resolve_threads",
    "run_sweep",
    "write_csv_atomic",
]
