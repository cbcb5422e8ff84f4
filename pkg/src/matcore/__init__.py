"""
Dense Hermitian/PSD matrix arithmetic, functional calculus and Loewner order.
"""

from src.matcore.matrix import (
    HermitianMatrix,
    PsdMatrix,
    apply_spectral,
    apply_spectral_psd,
    compress,
    congruence,
    expand,
    inv_psd,
    inv_sqrt_psd,
    is_invertible,
    is_psd,
    loewner_leq,
    min_eigenvalue,
    operator_norm,
    shorted,
    spectral_decompose,
    sqrt_psd,
    support_basis,
)
from src.matcore.textio import format_matrix, load_matrix, parse_matrix, write_matrix

__all__ = [
    "HermitianMatrix",
    "PsdMatrix",
    "apply_spectral",
    "apply_spectral_psd",
    "compress",
    "congruence",
    "expand",
    "format_matrix",
    "inv_psd",
    "inv_sqrt_psd",
    "is_invertible",
    "is_psd",
    "load_matrix",
    "loewner_leq",
    "min_eigenvalue",
    "operator_norm",
    "parse_matrix",
    "shorted",
    "spectral_decompose",
    "sqrt_psd",
    "support_basis",
    "write_matrix",
]
