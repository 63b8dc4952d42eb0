from trickle.errors import TrickleError


class CountingError(TrickleError):
    """Base exception for counting and marginal computations."""


class RecursionDepthError(CountingError):
    """The marginal recursion went deeper than the number of vertices."""
