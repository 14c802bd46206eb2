"""Exact structure-constant engine for finite-dimensional Hopf algebras.

Integrals and cointegrals, the trace endomorphisms P and Q, the trace map on End(A),
ladders, and a small tensor-diagram language, all over ℚ or GF(p).
"""

from .builtins import BUILTIN_NAMES, builtin, group_algebra, sweedler, taft, taft_algebra, trivial
from .errors import (
    AlgebraFormatError,
    AxiomError,
    DiagramError,
    DiagramSyntaxError,
    EvaluationError,
    FieldMismatchError,
    HopfintError,
    InputError,
    MathError,
    ScalarParseError,
    TheoremViolation,
)
from .hopf import HopfAlgebra, dual, dump_algebra, load_algebra, read_algebra, variant, verify_axioms
from .integrals import (
    cal_E,
    cal_Q_big,
    decompose_integral_cointegral,
    integral_space,
    is_integral_cointegral,
    kuperberg_P,
    ladder,
    normalize_pair,
    trace_Q,
)
from .scalars import GF, QQ, FieldSpec, Residue, parse_scalar
from .suite import check_paper, check_suite

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES", "builtin", "group_algebra", "sweedler", "taft", "taft_algebra", "trivial",
    "AlgebraFormatError", "AxiomError", "DiagramError", "DiagramSyntaxError", "EvaluationError",
    "FieldMismatchError", "HopfintError", "InputError", "MathError", "ScalarParseError", "TheoremViolation",
    "HopfAlgebra", "dual", "dump_algebra", "load_algebra", "read_algebra", "variant", "verify_axioms",
    "cal_E", "cal_Q_big", "decompose_integral_cointegral", "integral_space", "is_integral_cointegral",
    "kuperberg_P", "ladder", "normalize_pair", "trace_Q",
    "GF", "QQ", "FieldSpec", "Residue", "parse_scalar",
    "check_paper", "check_suite",
]
