import numpy as np
from scipy import linalg

from trickle.schemas.reports import LoewnerReport
from trickle.settings import get_settings

from .errors import AsymmetricMatrixError, IndexMismatchError, NegativeDiagonalError
from .labeled import Array, LabeledMatrix

ASYMMETRY_TOLERANCE = 1e-10
MATRIX_NDIM = 2


def _as_array(m: LabeledMatrix | Array) -> Array:
    return m.data if isinstance(m, LabeledMatrix) else np.asarray(m, dtype=float)


def symmetric_part(m: Array) -> Array:
    """(M + Mᵀ)/2, after checking M is symmetric up to a relative 1e−10."""
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    if not np.allclose(m, m.T, rtol=0.0, atol=ASYMMETRY_TOLERANCE * scale):
        msg = f"matrix is not symmetric (max skew {float(np.max(np.abs(m - m.T))):.3e})"
        raise AsymmetricMatrixError(msg)
    return (m + m.T) / 2


def eigenvalues(m: LabeledMatrix | Array) -> Array:
    """Ascending eigenvalues of a symmetric matrix."""
    data = symmetric_part(_as_array(m))
    if data.size == 0:
        return np.zeros(0)
    return linalg.eigvalsh(data)


def max_eigenvalue(m: LabeledMatrix | Array) -> float:
    """Largest eigenvalue of a symmetric matrix, 0 for an empty one."""
    values = eigenvalues(m)
    return float(values[-1]) if values.size else 0.0


def loewner_leq(
    a: LabeledMatrix | Array,
    b: LabeledMatrix | Array,
    tol: float | None = None,
    *,
    label: str = "",
) -> LoewnerReport:
    """Check A ⪯ B, i.e. that B − A is positive semi-definite.

    The verdict passes when the smallest eigenvalue of B − A is at least
    −tol·max(1, ‖B − A‖_max).
    """
    if isinstance(a, LabeledMatrix) and isinstance(b, LabeledMatrix) and a.index != b.index:
        msg = f"cannot compare matrices on different indices ({label or 'unlabeled'})"
        raise IndexMismatchError(msg)
    tol = tol if tol is not None else get_settings().tol_eig
    left, right = _as_array(a), _as_array(b)
    if left.shape != right.shape:
        msg = f"shape mismatch {left.shape} vs {right.shape}"
        raise IndexMismatchError(msg)
    diff = right - left
    scale = float(np.max(np.abs(diff), initial=0.0))
    values = eigenvalues(diff)
    min_eig = float(values[0]) if values.size else 0.0
    return LoewnerReport(
        label=label,
        min_eig_diff=min_eig,
        tolerance=tol,
        scale=scale,
        passed=min_eig >= -tol * max(1.0, scale),
    )


def _diagonal_values(pi: LabeledMatrix | Array) -> Array:
    data = _as_array(pi)
    values = np.diag(data) if data.ndim == MATRIX_NDIM else data
    if np.any(values < 0):
        msg = "diagonal weight matrix has a negative entry"
        raise NegativeDiagonalError(msg)
    return values


def _rebuild(pi: LabeledMatrix | Array, values: Array) -> LabeledMatrix | Array:
    if isinstance(pi, LabeledMatrix):
        return LabeledMatrix.diagonal(pi.index, values)
    return np.diag(values) if np.ndim(pi) == MATRIX_NDIM else values


def pinv_diag[T: (LabeledMatrix, Array)](pi: T) -> T:
    """Pseudo-inverse Π^{-1} of a nonnegative diagonal: reciprocals on the support."""
    values = _diagonal_values(pi)
    inverse = np.divide(1.0, values, out=np.zeros_like(values), where=values > 0)
    return _rebuild(pi, inverse)  # type: ignore[return-value]


def pinv_sqrt[T: (LabeledMatrix, Array)](pi: T) -> T:
    """Π^{-1/2} of a nonnegative diagonal: reciprocal square roots on the support."""
    values = _diagonal_values(pi)
    root = np.sqrt(values)
    inverse = np.divide(1.0, root, out=np.zeros_like(root), where=values > 0)
    return _rebuild(pi, inverse)  # type: ignore[return-value]


def spectral_radius(m: LabeledMatrix | Array) -> float:
    """Largest absolute eigenvalue; exact for any square matrix."""
    data = _as_array(m)
    if data.size == 0:
        return 0.0
    if np.allclose(data, data.T, rtol=0.0, atol=ASYMMETRY_TOLERANCE):
        return float(np.max(np.abs(linalg.eigvalsh((data + data.T) / 2))))
    return float(np.max(np.abs(linalg.eigvals(data))))


def row_sum_bound(m: LabeledMatrix | Array) -> float:
    """Largest absolute row sum, an upper bound on the spectral radius."""
    data = _as_array(m)
    return float(np.max(np.abs(data).sum(axis=1), initial=0.0))


def psd_sqrt(m: Array) -> Array:
    """Square root of a positive semi-definite matrix by eigendecomposition."""
    values, vectors = linalg.eigh(symmetric_part(m))
    return (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.T


def conjugate(m: LabeledMatrix, weights: Array) -> LabeledMatrix:
    """D M D for the diagonal D = diag(`weights`)."""
    return LabeledMatrix(m.index, weights[:, None] * m.data * weights[None, :])
