from .errors import DynamicsError, InitialColoringError, TooManyFacetsError
from .glauber import (
    DENSE_LIMIT,
    Coloring,
    GlauberChain,
    SpectralGap,
    glauber_chain,
    glauber_matrix,
    spectral_gap,
)
from .mixing import (
    TheoremGap,
    mixing_bound,
    mixing_bound_from_q,
    mixing_time_exact,
    theorem_gap_bound,
)
from .simulate import chain_rng, greedy_coloring, marginal_z_scores, simulate

__all__ = [
    "DENSE_LIMIT",
    "Coloring",
    "DynamicsError",
    "GlauberChain",
    "InitialColoringError",
    "SpectralGap",
    "TheoremGap",
    "TooManyFacetsError",
    "chain_rng",
    "glauber_chain",
    "glauber_matrix",
    "greedy_coloring",
    "marginal_z_scores",
    "mixing_bound",
    "mixing_bound_from_q",
    "mixing_time_exact",
    "simulate",
    "spectral_gap",
    "theorem_gap_bound",
]
