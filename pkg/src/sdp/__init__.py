"""Dense semidefinite programming: problem model, solver and certificates"""

from .certificate import CertificateReport, check_certificate
from .dump import dump_problem, load_problem
from .embedding import (
    HermitianUnit,
    combine,
    complex_part,
    embed_entries,
    embed_hermitian,
    hermitian_basis,
    partial_transpose_unit,
    scaled_entries,
    traceless_hermitian_basis,
    unit_matrix,
    unit_trace,
)
from .problem import ProblemBuilder, SdpProblem, SdpSolution, SolverStatus, triplets_of
from .solver import InteriorPointSolver, solve

__all__ = [
    "CertificateReport",
    "HermitianUnit",
    "InteriorPointSolver",
    "ProblemBuilder",
    "SdpProblem",
    "SdpSolution",
    "SolverStatus",
    "check_certificate",
    "combine",
    "complex_part",
    "dump_problem",
    "embed_entries",
    "embed_hermitian",
    "hermitian_basis",
    "load_problem",
    "partial_transpose_unit",
    "scaled_entries",
    "solve",
    "traceless_hermitian_basis",
    "triplets_of",
    "unit_matrix",
    "unit_trace",
]
