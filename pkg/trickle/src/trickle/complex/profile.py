from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod

from trickle.counting import count_extensions
from trickle.instances import ColoringInstance, PinnedInstance
from trickle.logger import get_logger
from trickle.settings import get_settings

from .errors import ComplexError
from .faces import iter_face_levels
from .link import MIN_WALK_CODIM, local_walk
from .spectrum import local_walk_spectrum

logger = get_logger(__name__)

SCALAR_TRICKLE_CODIM = 3
SCALAR_TRICKLE_LIMIT = 0.5


def second_eigenvalue(pinned: PinnedInstance, *, dense: bool = False) -> float:
    """λ₂(P_τ), from the dense walk or from the color-class blocks."""
    if dense:
        return local_walk(pinned).lambda2
    return local_walk_spectrum(pinned).lambda2


def local_spectral_profile(
    instance: ColoringInstance, *, dense: bool = False, workers: int | None = None
) -> list[float]:
    """γ_0..γ_{n−2}, where γ_j is the largest λ₂(P_τ) over faces τ with j pinned vertices.

    One representative per face class is solved; classes are spread over a
    thread pool.
    """
    workers = workers if workers is not None else get_settings().workers
    levels = [
        level
        for level in iter_face_levels(instance)
        if level and level[0].codim >= MIN_WALK_CODIM
    ]
    profile: list[float] = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for level in levels:
            values = list(pool.map(lambda f: second_eigenvalue(f.rep, dense=dense), level))
            profile.append(max(values))
    logger.info("Local spectral profile", extra={"n": instance.n, "profile": profile})
    return profile


@dataclass(frozen=True)
class GlobalGapBound:
    """Upper bound 1 − (1/n)Π(1 − γ_i) on λ₂ of the Glauber dynamics."""

    bound: float
    degenerate: bool

    @property
    def gap(self) -> float:
        """Implied lower bound on the spectral gap."""
        return 1 - self.bound


def local_to_global_gap(profile: list[float]) -> GlobalGapBound:
    """Aggregate a local spectral profile of an n-vertex instance (length n − 1).

    Any γ_i ≥ 1 makes the bound trivial; it is then reported as 1 and flagged.
    """
    if not profile:
        msg = "profile must hold at least γ_0"
        raise ComplexError(msg)
    n = len(profile) + 1
    if any(gamma >= 1 for gamma in profile):
        return GlobalGapBound(bound=1.0, degenerate=True)
    return GlobalGapBound(bound=1 - prod(1 - gamma for gamma in profile) / n, degenerate=False)


@dataclass(frozen=True)
class TrickleDownMargin:
    """Scalar trickle-down at one face: λ₂(P_τ) against λ/(1 − λ)."""

    face: str
    codim: int
    lambda2: float
    child_max: float
    applicable: bool
    bound: float | None
    passed: bool

    @property
    def margin(self) -> float | None:
        """bound − λ₂(P_τ), when the bound applies."""
        return None if self.bound is None else self.bound - self.lambda2


def _trickle_at(pinned: PinnedInstance, tol: float) -> TrickleDownMargin:
    lam = local_walk_spectrum(pinned).lambda2
    children = [pinned.extend(v, cls.rep) for cls in pinned.classes for v in cls.signature]
    child_max = max(
        local_walk_spectrum(child).lambda2
        for child in children
        if count_extensions(child).value > 0
    )
    applicable = lam < 1 - tol and child_max <= SCALAR_TRICKLE_LIMIT
    bound = child_max / (1 - child_max) if applicable else None
    passed = bound is None or lam <= bound + tol
    return TrickleDownMargin(
        face=pinned.describe(),
        codim=pinned.codim,
        lambda2=lam,
        child_max=child_max,
        applicable=applicable,
        bound=bound,
        passed=passed,
    )


def scalar_trickle_down(
    instance: ColoringInstance, *, tol: float | None = None
) -> list[TrickleDownMargin]:
    """Classical trickle-down at every face class of codim ≥ 3 with an irreducible walk.

    With λ the largest λ₂ over the children τ ∪ x, a face passes when λ > 1/2
    (nothing to check) or λ₂(P_τ) ≤ λ/(1 − λ).
    """
    tol = tol if tol is not None else get_settings().tol_eig
    margins = [
        _trickle_at(face.rep, tol)
        for level in iter_face_levels(instance)
        for face in level
        if face.codim >= SCALAR_TRICKLE_CODIM
    ]
    logger.info(
        "Scalar trickle-down",
        extra={"faces": len(margins), "failures": sum(not m.passed for m in margins)},
    )
    return margins
