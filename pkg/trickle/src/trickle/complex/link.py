"""Face distributions and local walks of the coloring complex at a face τ."""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

import numpy as np

from trickle.counting import count_extensions, marginals
from trickle.errors import CapExceededError
from trickle.instances import Element, ImproperPinningError, PinnedInstance
from trickle.logger import get_logger
from trickle.settings import get_settings
from trickle.specmat import Array, LabeledMatrix, eigenvalues, pinv_diag, pinv_sqrt

from .errors import ComplexError

logger = get_logger(__name__)

MIN_WALK_CODIM = 2


@dataclass(frozen=True)
class FaceDistribution:
    """π_{τ,j}: weights of the j-element faces of the link of τ."""

    level: int
    weights: dict[frozenset[Element], float]

    def total(self) -> float:
        """Sum of all weights."""
        return float(sum(self.weights.values()))

    def level_one(self) -> dict[Element, float]:
        """Project to single elements: each j-face spreads its weight evenly."""
        out: dict[Element, float] = {}
        for face, weight in self.weights.items():
            for x in face:
                out[x] = out.get(x, 0.0) + weight / self.level
        return dict(sorted(out.items()))


def _extension_count(pinned: PinnedInstance, omega: dict[int, int]) -> int:
    try:
        return count_extensions(pinned.extend_many(omega)).value
    except ImproperPinningError:
        return 0


def face_distribution(
    pinned: PinnedInstance, j: int, *, cap: int | None = None
) -> FaceDistribution:
    """Distribution π_{τ,j}(σ) = μ^τ(σ)/binom(k, j) over proper j-faces σ of the link."""
    k = pinned.codim
    if not 1 <= j <= k:
        msg = f"level {j} out of range 1..{k}"
        raise ComplexError(msg)
    cap = cap if cap is not None else get_settings().cap_enum
    total = count_extensions(pinned).value
    if total == 0:
        msg = f"face {pinned.describe()} has no completion"
        raise ComplexError(msg)
    scale = total * comb(k, j)
    residual = pinned.residual
    weights: dict[frozenset[Element], float] = {}
    for subset in combinations(pinned.free, j):
        for sigma in residual.restrict(subset).colorings():
            weight = _extension_count(pinned, sigma)
            if weight:
                weights[frozenset(sigma.items())] = weight / scale
            if len(weights) > cap:
                raise CapExceededError("face distribution", len(weights), cap)
    return FaceDistribution(level=j, weights=weights)


@dataclass(frozen=True, eq=False)
class LocalWalk:
    """The local walk P_τ with its stationary distribution π_τ on the support."""

    pinned: PinnedInstance
    index: tuple[Element, ...]
    pi: Array
    weights: LabeledMatrix

    @property
    def codim(self) -> int:
        """Codimension of the face."""
        return self.pinned.codim

    @cached_property
    def stationary(self) -> LabeledMatrix:
        """Π_τ."""
        return LabeledMatrix.diagonal(self.index, self.pi)

    @cached_property
    def transition(self) -> LabeledMatrix:
        """P_τ = Π_τ^{-1}(Π_τP_τ)."""
        return pinv_diag(self.stationary) @ self.weights

    @cached_property
    def pi_outer(self) -> LabeledMatrix:
        """π_τπ_τᵀ."""
        return LabeledMatrix(self.index, np.outer(self.pi, self.pi))

    @cached_property
    def symmetrized(self) -> LabeledMatrix:
        """Π_τ^{1/2}P_τΠ_τ^{-1/2}, computed as Π_τ^{-1/2}(Π_τP_τ)Π_τ^{-1/2}."""
        half = pinv_sqrt(self.stationary)
        return half @ self.weights @ half

    @cached_property
    def spectrum(self) -> Array:
        """Eigenvalues of P_τ in decreasing order."""
        return eigenvalues(self.symmetrized)[::-1]

    @property
    def lambda2(self) -> float:
        """Second largest eigenvalue of P_τ."""
        return float(self.spectrum[1]) if self.spectrum.size > 1 else 0.0


def local_walk(pinned: PinnedInstance, *, cap: int | None = None) -> LocalWalk:
    """Dense local walk P_τ(x, y) = π_{τ,2}({x,y})/(2π_{τ,1}(x)) on the support of π_τ.

    Zero-mass elements are left out of the index.
    """
    k = pinned.codim
    if k < MIN_WALK_CODIM:
        msg = f"local walk needs codim ≥ 2, got {k}"
        raise ComplexError(msg)
    total = count_extensions(pinned).value
    probabilities = marginals(pinned)
    index = tuple(x for x, p in probabilities.entries.items() if p > 0)
    size = len(index)
    cap = cap if cap is not None else get_settings().cap_enum
    if size * size > cap:
        raise CapExceededError("dense local walk", size * size, cap)
    pi = np.array([probabilities[x] for x in index]) / k
    w = np.zeros((size, size))
    for a, b in combinations(range(size), 2):
        (u, c1), (v, c2) = index[a], index[b]
        if u == v:
            continue
        count = _extension_count(pinned, {u: c1, v: c2})
        w[a, b] = w[b, a] = count / (total * k * (k - 1))
    logger.debug(
        "Built local walk", extra={"face": pinned.describe(), "support": size}
    )
    return LocalWalk(pinned=pinned, index=index, pi=pi, weights=LabeledMatrix(index, w))
