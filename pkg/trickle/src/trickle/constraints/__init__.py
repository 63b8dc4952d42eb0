from .errors import ConstraintError, InfeasibleBracketError
from .search import joint_search, min_p_search
from .solutions import (
    CoefficientSolution,
    b_threshold,
    bprime_threshold,
    solve_b,
    solve_bprime,
)
from .systems import (
    ConstraintSystem,
    Slack,
    SystemCheck,
    SystemKind,
    check_system,
)
from .thresholds import (
    HEADLINE_CONSTANT,
    BetaThreshold,
    beta_threshold,
    c_of_delta,
    closed_form_p,
    default_iota,
    headline_ratio,
    lemma_grid,
    min_p_table,
    simplified_bound,
    sup_ratio,
    threshold_table,
)

__all__ = [
    "HEADLINE_CONSTANT",
    "BetaThreshold",
    "CoefficientSolution",
    "ConstraintError",
    "ConstraintSystem",
    "InfeasibleBracketError",
    "Slack",
    "SystemCheck",
    "SystemKind",
    "b_threshold",
    "beta_threshold",
    "bprime_threshold",
    "c_of_delta",
    "check_system",
    "closed_form_p",
    "default_iota",
    "headline_ratio",
    "joint_search",
    "lemma_grid",
    "min_p_search",
    "min_p_table",
    "simplified_bound",
    "solve_b",
    "solve_bprime",
    "sup_ratio",
    "threshold_table",
]
