from trickle.schemas.reports import LoewnerReport

from .errors import AsymmetricMatrixError, IndexMismatchError, MatrixError, NegativeDiagonalError
from .labeled import Array, LabeledMatrix
from .lemmas import lemma_property_suite, monotone_inverse, run_family
from .loewner import (
    conjugate,
    eigenvalues,
    loewner_leq,
    max_eigenvalue,
    pinv_diag,
    pinv_sqrt,
    psd_sqrt,
    row_sum_bound,
    spectral_radius,
    symmetric_part,
)

__all__ = [
    "Array",
    "AsymmetricMatrixError",
    "IndexMismatchError",
    "LabeledMatrix",
    "LoewnerReport",
    "MatrixError",
    "NegativeDiagonalError",
    "conjugate",
    "eigenvalues",
    "lemma_property_suite",
    "loewner_leq",
    "max_eigenvalue",
    "monotone_inverse",
    "pinv_diag",
    "pinv_sqrt",
    "psd_sqrt",
    "row_sum_bound",
    "run_family",
    "spectral_radius",
    "symmetric_part",
]
