"""Exact exponentials of real, complex and quaternionic matrices through
their spinor representations in real Clifford algebras."""
from .algebra import (
    AlgebraContext,
    Multivector,
    Signature,
    algebra,
    coeff_norm,
    format_multivector,
)
from .errors import (
    CliffordError,
    ContextMismatchError,
    ConvergenceError,
    DimensionError,
    NotIdempotentError,
    ParseError,
    SemisimpleError,
    SignatureError,
    SingularSystemError,
    UnsupportedFieldError,
)
from .isomorphism import ReprTable, default_signature, phi, repr_table, unphi
from .kmatrix import KField, KMatrix
from .matrixref import cpoly_divide, matrix_1norm, matrix_minpoly, reference_expm
from .minpoly import approximation_error, climinpoly, exp_converged, sexp
from .parsing import parse_matrix, parse_multivector
from .poly import Polynomial
from .scalars import GaussianRational
from .structure import (
    AlgebraData,
    SpinorBasis,
    clidata,
    field_kind,
    mat_k_repr,
    primitive_idempotent,
    radon_hurwitz,
    spinor_basis,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraContext",
    "Multivector",
    "Signature",
    "algebra",
    "coeff_norm",
    "format_multivector",
    "CliffordError",
    "ContextMismatchError",
    "ConvergenceError",
    "DimensionError",
    "NotIdempotentError",
    "ParseError",
    "SemisimpleError",
    "SignatureError",
    "SingularSystemError",
    "UnsupportedFieldError",
    "ReprTable",
    "default_signature",
    "phi",
    "repr_table",
    "unphi",
    "KField",
    "KMatrix",
    "cpoly_divide",
    "matrix_1norm",
    "matrix_minpoly",
    "reference_expm",
    "approximation_error",
    "climinpoly",
    "exp_converged",
    "sexp",
    "parse_matrix",
    "parse_multivector",
    "Polynomial",
    "GaussianRational",
    "AlgebraData",
    "SpinorBasis",
    "clidata",
    "field_kind",
    "mat_k_repr",
    "primitive_idempotent",
    "radon_hurwitz",
    "spinor_basis",
]
