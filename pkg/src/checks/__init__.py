"""Property batteries and their report"""

from .batteries import SUITES, Outcome, SuiteResult, run_suite, suite_names
from .reporting import render_report

__all__ = ["SUITES", "Outcome", "SuiteResult", "render_report", "run_suite", "suite_names"]
