import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, overload

from trickle.instances import ImproperPinningError, PinnedInstance, Residual
from trickle.logger import get_logger
from trickle.settings import get_settings

from .engine import count_extensions
from .errors import CountingError, RecursionDepthError

logger = get_logger(__name__)


@dataclass(frozen=True)
class MarginalVector:
    """Single-vertex marginals μ^τ_v(c) of the free vertices."""

    entries: dict[tuple[int, int], float]

    def for_vertex(self, v: int) -> dict[int, float]:
        """Color -> probability for vertex `v`."""
        return {c: p for (u, c), p in self.entries.items() if u == v}

    def __getitem__(self, element: tuple[int, int]) -> float:
        """Probability of `element`, 0 when it is not in the support."""
        return self.entries.get(element, 0.0)


@overload
def marginal(
    pinned: PinnedInstance, omega: Mapping[int, int], *, exact: Literal[False] = False
) -> float: ...


@overload
def marginal(
    pinned: PinnedInstance, omega: Mapping[int, int], *, exact: Literal[True]
) -> Fraction: ...


def marginal(
    pinned: PinnedInstance, omega: Mapping[int, int], *, exact: bool = False
) -> float | Fraction:
    """Probability μ^τ_S(ω) that a uniform completion of `pinned` agrees with ω on S.

    Args:
        pinned (PinnedInstance): the face τ.
        omega (Mapping[int, int]): partial coloring of free vertices; S is its domain.
        exact (bool, optional): return a Fraction; limited to small residuals.

    Returns:
        float | Fraction: the marginal, 0 when ω is improper.

    """
    limit = get_settings().exact_rational_max_free
    if exact and pinned.codim > limit:
        msg = f"exact rational mode needs at most {limit} free vertices"
        raise CountingError(msg)
    if any(v not in pinned.residual_lists for v in omega):
        msg = "omega must color free vertices only"
        raise CountingError(msg)
    total = count_extensions(pinned).value
    if total == 0:
        msg = f"face {pinned.describe()} has no completion"
        raise CountingError(msg)
    try:
        extended = pinned.extend_many(omega)
    except ImproperPinningError:
        return Fraction(0) if exact else 0.0
    part = count_extensions(extended).value
    return Fraction(part, total) if exact else part / total


def marginals(pinned: PinnedInstance) -> MarginalVector:
    """All single-vertex marginals, one count per (vertex, color class)."""
    total = count_extensions(pinned).value
    if total == 0:
        msg = f"face {pinned.describe()} has no completion"
        raise CountingError(msg)
    entries: dict[tuple[int, int], float] = {}
    for k in pinned.classes:
        for v in k.signature:
            p = count_extensions(pinned.extend(v, k.rep)).value / total
            for c in k.colors:
                entries[(v, c)] = p
    return MarginalVector(dict(sorted(entries.items())))


def _recursive(residual: Residual, u: int, c: int, depth: int, limit: int) -> float:
    if depth > limit:
        msg = f"marginal recursion exceeded depth {limit}"
        raise RecursionDepthError(msg)
    if c not in residual.lists[u]:
        return 0.0
    nbrs = sorted(residual.neighbors[u])
    if not nbrs:
        return 1 / len(residual.lists[u])
    rest = residual.remove([u])

    def weight(color: int) -> float:
        # Pr[no neighbor takes `color`] on G − u, one neighbor at a time
        product = 1.0
        lists = rest
        for v in nbrs:
            product *= 1 - _recursive(lists, v, color, depth + 1, limit)
            lists = lists.drop_color([v], color)
        return product

    numerator = weight(c)
    denominator = sum(weight(other) for other in residual.lists[u])
    if denominator == 0:
        msg = f"vertex {u} has no feasible color in the recursion"
        raise CountingError(msg)
    return numerator / denominator


def marginal_recursive(pinned: PinnedInstance | Residual, u: int, c: int) -> float:
    """Marginal p(uc) through the vertex-removal recursion.

    p(uc) is proportional to the product over the neighbors v_1..v_d of u of
    1 − p(v_i c), each evaluated on G − u with c already removed from v_1..v_{i−1}.
    """
    residual = pinned.residual if isinstance(pinned, PinnedInstance) else pinned
    if u not in residual.lists:
        msg = f"vertex {u} is not free"
        raise CountingError(msg)
    return _recursive(residual, u, c, 0, len(residual.vertices))


@dataclass(frozen=True)
class MarginalBounds:
    """Lower and upper marginal bounds at one element, with the exact value.

    `applicable` is False when the residual list does not exceed the residual
    degree or the slack is below 1; the missing bound is then reported as
    0 (lower) or infinity (upper) and `ok` only reflects the bound that exists.
    """

    lower: float
    upper: float
    value: float
    ok: bool
    applicable: bool = True


def check_marginal_bounds(
    pinned: PinnedInstance, u: int, c: int, *, beta: int | None = None, tol: float | None = None
) -> MarginalBounds:
    """Check (1 − 1/β)^{Δ_τ(u)}/ℓ_u^τ ≤ μ^τ_u(c) ≤ 1/(ℓ_u^τ − Δ_τ(u))."""
    beta = beta if beta is not None else pinned.parent.beta
    tol = tol if tol is not None else get_settings().tol_exact
    ell = len(pinned.residual_lists[u])
    degree = pinned.residual_degree(u)
    lower = (1 - 1 / beta) ** degree / ell if beta >= 1 else 0.0
    upper = 1 / (ell - degree) if ell > degree else math.inf
    applicable = beta >= 1 and ell > degree
    if not applicable:
        logger.debug(
            "Marginal bounds not applicable",
            extra={"vertex": u, "color": c, "ell": ell, "degree": degree, "beta": beta},
        )
    value = marginal(pinned, {u: c})
    ok = lower - tol <= value <= upper + tol
    return MarginalBounds(lower, upper, value, ok, applicable)
