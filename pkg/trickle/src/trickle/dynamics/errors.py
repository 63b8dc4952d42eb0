from trickle.errors import CapExceededError, TrickleError


class DynamicsError(TrickleError):
    """Base exception for the Glauber dynamics."""


class TooManyFacetsError(DynamicsError, CapExceededError):
    """The chain has too many states to build exactly; use simulation instead."""


class InitialColoringError(DynamicsError):
    """Greedy list-coloring found no proper start state."""
