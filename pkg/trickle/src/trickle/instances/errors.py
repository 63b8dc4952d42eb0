from trickle.errors import TrickleError


class InstanceError(TrickleError):
    """Base exception for malformed graphs, lists and pinnings."""


class EmptyLineGraphError(InstanceError):
    """The base graph has no edges, so its line graph is empty."""


class InvalidBaseGraphError(InstanceError):
    """The base graph has self-loops, duplicate edges or out-of-range vertices."""


class InsufficientSlackError(InstanceError):
    """Some list does not exceed its vertex degree by the required slack."""


class EmptyListError(InstanceError):
    """A vertex has an empty color list."""


class InvalidListError(InstanceError):
    """The lists do not match the vertices, or a list leaves the color universe 1..q."""


class InvalidCliqueCoverError(InstanceError):
    """The clique cover does not cover the graph by cliques as a line graph would."""


class ImproperPinningError(InstanceError):
    """A partial coloring is improper or uses a color outside a list."""
