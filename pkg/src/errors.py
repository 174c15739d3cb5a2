"""Exception hierarchy shared by the toolkit"""

from typing import Any, Dict, Optional


class KappaError(Exception):
    """Base class for toolkit errors"""


class ValidationError(KappaError, ValueError):
    """Invalid input: bad dimensions, non-Hermitian matrix, out-of-range parameter"""


class SolverFailure(KappaError, RuntimeError):
    """SDP solve ended without an Optimal certificate"""

    def __init__(self, message: str, solution: Any = None):
        super().__init__(message)
        self.solution = solution


class IntegrityFailure(KappaError, RuntimeError):
    """A result that theory guarantees failed its own verification"""

    def __init__(self, message: str, residuals: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.residuals = residuals or {}
