from .engine import (
    Backend,
    ExtensionCount,
    clear_cache,
    completions,
    count_extensions,
    count_residual,
)
from .errors import CountingError, RecursionDepthError
from .marginals import (
    MarginalBounds,
    MarginalVector,
    check_marginal_bounds,
    marginal,
    marginal_recursive,
    marginals,
)

__all__ = [
    "Backend",
    "CountingError",
    "ExtensionCount",
    "MarginalBounds",
    "MarginalVector",
    "RecursionDepthError",
    "check_marginal_bounds",
    "clear_cache",
    "completions",
    "count_extensions",
    "count_residual",
    "marginal",
    "marginal_recursive",
    "marginals",
]
