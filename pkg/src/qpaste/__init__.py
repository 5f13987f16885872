"""One-error stabilizer codes: verification, pasting, catalog families.

Pauli products are kept in a bit-packed symplectic form with a real sign
convention, codes are ordered generator lists, and every construction is
machine-verified: weight-1 syndrome distinctness, exact bound arithmetic
and (for small n) a dense-statevector cross-check of the error-correction
conditions.
"""

from .pauli import (
    PauliOperator,
    PauliParseError,
    adjoint,
    commutes,
    format_pauli,
    identity,
    multiply,
    parse_pauli,
    square_sign,
    tensor,
    weight,
    y_count,
)
from .stabilizer import (
    CodeParameters,
    InvalidCodeError,
    StabilizerCode,
    Syndrome,
    ValidationReport,
    Violation,
    canonical_generators,
    contains,
    group_equal,
    parameters,
    syndrome,
    validate,
)
from .verification import (
    BoundStatus,
    DistanceReport,
    ErrorSet,
    best_k,
    distance,
    enumerate_errors,
    hamming_bound,
    is_perfect,
    iter_weight_errors,
    perfect_length,
    verify_distance3,
)
from .kl import (
    CapExceededError,
    Codespace,
    KLReport,
    apply_pauli,
    codewords,
    kl_check,
)
from .pasting import (
    PaddedCode,
    PasteCheck,
    PasteDiagnostics,
    PasteError,
    PasteVerificationError,
    augment,
    can_paste,
    locate_xz_generators,
    paste,
)
from .catalog import CatalogEntry, builtin, entries, hamming_class, perfect
from .files import StabilizerFileError, dumps, loads

__version__ = "0.1.0"

__all__ = [
    "PauliOperator",
    "PauliParseError",
    "adjoint",
    "commutes",
    "format_pauli",
    "identity",
    "multiply",
    "parse_pauli",
    "square_sign",
    "tensor",
    "weight",
    "y_count",
    "CodeParameters",
    "InvalidCodeError",
    "StabilizerCode",
    "Syndrome",
    "ValidationReport",
    "Violation",
    "canonical_generators",
    "contains",
    "group_equal",
    "parameters",
    "syndrome",
    "validate",
    "BoundStatus",
    "DistanceReport",
    "ErrorSet",
    "best_k",
    "distance",
    "enumerate_errors",
    "hamming_bound",
    "is_perfect",
    "iter_weight_errors",
    "perfect_length",
    "verify_distance3",
    "CapExceededError",
    "Codespace",
    "KLReport",
    "apply_pauli",
    "codewords",
    "kl_check",
    "PaddedCode",
    "PasteCheck",
    "PasteDiagnostics",
    "PasteError",
    "PasteVerificationError",
    "augment",
    "can_paste",
    "locate_xz_generators",
    "paste",
    "CatalogEntry",
    "builtin",
    "entries",
    "hamming_class",
    "perfect",
    "StabilizerFileError",
    "dumps",
    "loads",
]
