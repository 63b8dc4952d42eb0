from trickle.errors import TrickleError


class MatrixError(TrickleError):
    """Base exception for matrix utilities."""


class IndexMismatchError(MatrixError):
    """Two labeled matrices do not share an index."""


class AsymmetricMatrixError(MatrixError):
    """A matrix expected to be symmetric is not."""


class NegativeDiagonalError(MatrixError):
    """A diagonal weight matrix has a negative entry."""
