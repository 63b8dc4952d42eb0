from trickle.errors import TrickleError


class ConstraintError(TrickleError):
    """Invalid constraint system or solver failure."""


class InfeasibleBracketError(ConstraintError):
    """The upper end of a search bracket is not feasible."""
