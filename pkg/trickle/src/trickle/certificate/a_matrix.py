"""The off-diagonal part A_τ^i of the certificate, one clique and one color at a time.

Three independent constructions are provided: a closed count over colorings of
V_τ minus the pair, the sum over boundary completions ω, and the defining
recursion through π_{τ,k−2}. Under slack all three agree.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

import numpy as np

from trickle.complex import face_distribution
from trickle.counting import completions, count_extensions, count_residual, marginals
from trickle.instances import Element, PinnedInstance
from trickle.logger import get_logger
from trickle.schemas import LoewnerReport
from trickle.specmat import (
    Array,
    LabeledMatrix,
    conjugate,
    loewner_leq,
    pinv_diag,
    pinv_sqrt,
    spectral_radius,
)

from .errors import CertificateError
from .extensions import child_groups
from .schedule import CertificateSchedule

logger = get_logger(__name__)

MIN_A_CODIM = 2
MIN_EXPECTATION_CODIM = 3
REMAINDER_SCALE = 5.0
NORM_CAP = 1 / 20


class AForm(StrEnum):
    """Which construction of A_τ^{i,c} to run."""

    COUNT = "count"
    BOUNDARY = "boundary"


def _members(
    pinned: PinnedInstance, i: int, c: int
) -> tuple[tuple[int, ...], tuple[Element, ...]]:
    members = pinned.clique_color_members(i, c)
    return members, tuple((v, c) for v in members)


def _require_codim(pinned: PinnedInstance, least: int) -> None:
    if pinned.codim < least:
        msg = f"needs codim ≥ {least}, got {pinned.codim}"
        raise CertificateError(msg)


def _stationary(pinned: PinnedInstance, index: tuple[Element, ...]) -> Array:
    probabilities = marginals(pinned)
    return np.array([probabilities[x] / pinned.codim for x in index])


def _count_entry(pinned: PinnedInstance, u: int, v: int, c: int) -> int:
    residual = pinned.residual
    boundary = (residual.neighbors[u] | residual.neighbors[v]) - {u, v}
    return count_residual(residual.remove([u, v]).drop_color(boundary, c))


def _lists_without(
    pinned: PinnedInstance, omega: Mapping[int, int], u: int, skip: frozenset[int]
) -> frozenset[int]:
    """L_u under τ ∪ ω restricted to V minus `skip`."""
    taken = {omega[w] for w in pinned.residual.neighbors[u] if w not in skip}
    return pinned.residual_lists[u] - taken


def _pair_denominator(lists_u: frozenset[int], lists_v: frozenset[int]) -> int:
    # (ℓ_u − 1)(ℓ_v − 1) − (ℓ_uv − 1)
    return (len(lists_u) - 1) * (len(lists_v) - 1) - (len(lists_u & lists_v) - 1)


def _boundary_entry(
    pinned: PinnedInstance, omega: Mapping[int, int], u: int, v: int, c: int
) -> float:
    skip = frozenset((u, v))
    lists_u = _lists_without(pinned, omega, u, skip)
    lists_v = _lists_without(pinned, omega, v, skip)
    if c not in lists_u or c not in lists_v:
        return 0.0
    return -1 / _pair_denominator(lists_u, lists_v)


def a_matrix(
    pinned: PinnedInstance,
    i: int,
    c: int,
    schedule: CertificateSchedule,
    *,
    form: AForm = AForm.COUNT,
) -> LabeledMatrix:
    """A_τ^{i,c} on the members (v, c) of clique `i` whose residual list holds `c`.

    The boundary form averages A_τ^{i,ω} over completions ω that give no member
    of the clique the color `c`, scaled by a_h/(k|𝓒_{τ,k}|). Summing out the
    colors of u and v collapses it to the count form
    −(a_h/k)·#{colorings of V_τ − {u, v} avoiding c around u and v}/|𝓒_{τ,k}|.
    h is the number of free clique members minus one; A is zero when h = 0.
    """
    _require_codim(pinned, MIN_A_CODIM)
    members, index = _members(pinned, i, c)
    h = pinned.clique_h(i)
    out = np.zeros((len(index), len(index)))
    if h == 0 or len(members) < MIN_A_CODIM:
        return LabeledMatrix(index, out)
    k = pinned.codim
    total = count_extensions(pinned).value
    scale = schedule.a_of(h) / (k * total)
    pairs = list(combinations(range(len(members)), 2))
    if form is AForm.COUNT:
        for a, b in pairs:
            out[a, b] = out[b, a] = -scale * _count_entry(pinned, members[a], members[b], c)
        return LabeledMatrix(index, out)
    clique = pinned.residual_cliques[i]
    for omega in completions(pinned):
        if any(omega[w] == c for w in clique):
            continue
        for a, b in pairs:
            value = _boundary_entry(pinned, omega, members[a], members[b], c)
            out[a, b] += value
            out[b, a] += value
    return LabeledMatrix(index, out * scale)


def a_matrix_recursive(
    pinned: PinnedInstance, i: int, c: int, schedule: CertificateSchedule
) -> LabeledMatrix:
    """A_τ^{i,c} from a_h(k − 1)·E_{σ∼π_{τ,k−2}}[A^{i,c}_{τ∪σ}], with the base case at codim 2."""
    _require_codim(pinned, MIN_A_CODIM)
    members, index = _members(pinned, i, c)
    position = {v: j for j, v in enumerate(members)}
    h = pinned.clique_h(i)
    out = np.zeros((len(index), len(index)))
    if h == 0 or len(members) < MIN_A_CODIM:
        return LabeledMatrix(index, out)
    k = pinned.codim
    if k == MIN_A_CODIM:
        distribution = {frozenset(): 1.0}
    else:
        distribution = face_distribution(pinned, k - MIN_A_CODIM).weights
    for sigma, weight in distribution.items():
        face = pinned.extend_many(dict(sigma))
        u, v = face.free
        if u not in position or v not in position:
            continue
        residual = face.residual
        if c not in residual.lists[u] or c not in residual.lists[v]:
            continue
        d = len(residual.lists[u]) * len(residual.lists[v]) - residual.shared(u, v)
        a, b = position[u], position[v]
        out[a, b] += weight * -1 / (2 * d)
        out[b, a] = out[a, b]
    return LabeledMatrix(index, out * schedule.a_of(h) * (k - 1))


def expected_child_a(
    pinned: PinnedInstance, i: int, c: int, schedule: CertificateSchedule
) -> LabeledMatrix:
    """E_{x∼π_τ}[A^{i,c}_{τ∪x}] on the index of A_τ^{i,c}."""
    _require_codim(pinned, MIN_EXPECTATION_CODIM)
    _, index = _members(pinned, i, c)
    out = LabeledMatrix.zeros(index)
    for group in child_groups(pinned, c):
        child = a_matrix(group.child, i, c, schedule).reindex(index)
        out = out + child * group.weight
    return out


@dataclass(frozen=True)
class ExpectationCheck:
    """Both sides of E_x[A^i_{τ∪x}] = factor·A_τ^i."""

    expected: LabeledMatrix
    predicted: LabeledMatrix
    factor: float

    @property
    def deviation(self) -> float:
        """Largest entrywise gap."""
        return self.expected.max_abs_deviation(self.predicted)


def expectation_factor(schedule: CertificateSchedule, h: int, k: int) -> float:
    """((h − 1)a_{h−1}/a_h + (k − 1 − h))/(k − 1)."""
    if h == 0:
        return 0.0
    return ((h - 1) * schedule.a_of(h - 1) / schedule.a_of(h) + (k - 1 - h)) / (k - 1)


def a_expectation(
    pinned: PinnedInstance, i: int, c: int, schedule: CertificateSchedule
) -> ExpectationCheck:
    """Compare the exact expectation over single extensions with the scaled A_τ^{i,c}."""
    expected = expected_child_a(pinned, i, c, schedule)
    factor = expectation_factor(schedule, pinned.clique_h(i), pinned.codim)
    predicted = a_matrix(pinned, i, c, schedule) * factor
    return ExpectationCheck(expected, predicted, factor)


@dataclass(frozen=True)
class XiDecomposition:
    """A_τ^{i,ω} = Ξ(−Adj + 𝓡)Ξ for one completion ω."""

    index: tuple[Element, ...]
    xi: Array
    remainder: Array
    boundary: Array
    radius_bound: float
    entry_bound: float

    @property
    def adjacency(self) -> Array:
        """Adjacency among the clique members: every pair."""
        size = len(self.index)
        return np.ones((size, size)) - np.eye(size)

    @property
    def radius(self) -> float:
        """ρ(𝓡)."""
        return spectral_radius(self.remainder)

    @property
    def max_entry(self) -> float:
        """Largest |𝓡(uc, vc)|."""
        return float(np.max(np.abs(self.remainder), initial=0.0))

    @property
    def radius_ok(self) -> bool:
        """ρ(𝓡) ≤ 5h/(β − 1) with h = |V_τ^{i,c}| − 1."""
        return self.radius <= self.radius_bound

    @property
    def entry_ok(self) -> bool:
        """|𝓡(uc, vc)| ≤ 5/(β − 1) everywhere."""
        return self.max_entry <= self.entry_bound

    def reconstruction_deviation(self) -> float:
        """Entrywise gap between A_τ^{i,ω} and Ξ(−Adj + 𝓡)Ξ."""
        xi = np.diag(self.xi)
        rebuilt = xi @ (self.remainder - self.adjacency) @ xi
        return float(np.max(np.abs(rebuilt - self.boundary), initial=0.0))


def xi_decomposition(
    pinned: PinnedInstance, i: int, c: int, omega: Mapping[int, int]
) -> XiDecomposition:
    """Split A_τ^{i,ω} into the main term Ξ and the remainder 𝓡.

    Ξ(uc, uc) = 1[c ∈ L_u]/(ℓ_u − 1) with lists taken under ω off u, and
    𝓡(uc, vc) = 1 − ℓ̄_uℓ̄_v/(ℓ̄'_uℓ̄'_v − ℓ̄'_uv) where ℓ̄ = ℓ − 1 and the primed
    lists are taken under ω off both u and v.
    """
    clique = pinned.residual_cliques[i]
    if any(omega.get(w) == c for w in clique):
        msg = f"completion colors a member of clique {i} with {c}"
        raise CertificateError(msg)
    members, index = _members(pinned, i, c)
    size = len(members)
    xi = np.zeros(size)
    reduced = np.zeros(size)
    for a, u in enumerate(members):
        lists = _lists_without(pinned, omega, u, frozenset((u,)))
        if c in lists:
            reduced[a] = len(lists) - 1
            xi[a] = 1 / reduced[a]
    remainder = np.zeros((size, size))
    boundary = np.zeros((size, size))
    for a, b in combinations(range(size), 2):
        u, v = members[a], members[b]
        boundary[a, b] = boundary[b, a] = _boundary_entry(pinned, omega, u, v, c)
        if xi[a] == 0 or xi[b] == 0:
            continue
        skip = frozenset((u, v))
        denominator = _pair_denominator(
            _lists_without(pinned, omega, u, skip), _lists_without(pinned, omega, v, skip)
        )
        remainder[a, b] = remainder[b, a] = 1 - reduced[a] * reduced[b] / denominator
    beta = pinned.parent.beta
    h = pinned.clique_color_h(i, c)
    return XiDecomposition(
        index=index,
        xi=xi,
        remainder=remainder,
        boundary=boundary,
        radius_bound=REMAINDER_SCALE * h / (beta - 1),
        entry_bound=REMAINDER_SCALE / (beta - 1),
    )


def xi_sum_identity(pinned: PinnedInstance, i: int, c: int) -> float:
    """Deviation of (1/(k|𝓒_{τ,k}|))Π_τ^{-1}Σ_ω Ξ_τ^{i,ω} from the identity on the clique.

    ω runs over completions giving no clique member the color `c`.
    """
    _, index = _members(pinned, i, c)
    if not index:
        return 0.0
    clique = pinned.residual_cliques[i]
    total = np.zeros(len(index))
    for omega in completions(pinned):
        if any(omega[w] == c for w in clique):
            continue
        total += xi_decomposition(pinned, i, c, omega).xi
    k = pinned.codim
    scaled = pinv_diag(_stationary(pinned, index)) * total / (k * count_extensions(pinned).value)
    return float(np.max(np.abs(scaled - 1)))


def aggregate_cap(
    pinned: PinnedInstance, i: int, c: int, schedule: CertificateSchedule
) -> float:
    """C(Δ)h/(β−1)² with h = |V_τ^{i,c}| − 1."""
    return schedule.c_delta * pinned.clique_color_h(i, c) / (schedule.beta - 1) ** 2


def aggregate_bound(
    pinned: PinnedInstance, i: int, c: int, schedule: CertificateSchedule
) -> LoewnerReport:
    """Π^{-1/2}((k−1)E[A^i_{τ∪x}] − (k−2)A^i + 4A^iΠ^{-1}A^i)Π^{-1/2} ⪯ aggregate_cap·Id."""
    k = pinned.codim
    a = a_matrix(pinned, i, c, schedule)
    pi = _stationary(pinned, a.index)
    expected = expected_child_a(pinned, i, c, schedule)
    inverse = LabeledMatrix.diagonal(a.index, pinv_diag(pi))
    inner = expected * (k - 1) - a * (k - 2) + (a @ inverse @ a) * 4
    lhs = conjugate(inner, pinv_sqrt(pi))
    bound = aggregate_cap(pinned, i, c, schedule)
    cap = LabeledMatrix.diagonal(a.index, np.full(a.size, bound))
    return loewner_leq(lhs, cap, label="aggregate")


def a_norm_bound(
    pinned: PinnedInstance, i: int, c: int, schedule: CertificateSchedule
) -> LoewnerReport:
    """Π^{-1/2}A_τ^{i,c}Π^{-1/2} ⪯ (1/20)Id."""
    a = a_matrix(pinned, i, c, schedule)
    lhs = conjugate(a, pinv_sqrt(_stationary(pinned, a.index)))
    cap = LabeledMatrix.diagonal(a.index, np.full(a.size, NORM_CAP))
    return loewner_leq(lhs, cap, label="a-norm")
