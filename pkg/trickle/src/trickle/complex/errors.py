from trickle.errors import TrickleError


class ComplexError(TrickleError):
    """Base exception for link and local-walk computations."""
