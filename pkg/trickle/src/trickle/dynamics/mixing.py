"""Mixing-time bounds and exact total-variation curves for Glauber dynamics."""

from dataclasses import dataclass
from math import ceil, log

import numpy as np

from trickle.complex import local_to_global_gap
from trickle.logger import get_logger
from trickle.schemas import MixingReport
from trickle.settings import get_settings

from .errors import DynamicsError
from .glauber import GlauberChain, spectral_gap

logger = get_logger(__name__)

# Multiples of the spectral bound stepped through before the curve is cut off.
STEP_ALLOWANCE = 4
THEOREM_GAP_SCALE = 8 / 9
THEOREM_GAP_EXPONENT = 10 / 9
MIN_VERTICES = 2


def _require_eps(eps: float) -> None:
    if not 0 < eps < 1:
        msg = f"eps must lie in (0, 1), got {eps}"
        raise DynamicsError(msg)


def mixing_bound(gap: float, pi_min: float, eps: float) -> float:
    """t_mix(ε) ≤ (1/λ⋆)(½·log(1/π_min) + log(1/(2ε))) for absolute gap λ⋆."""
    _require_eps(eps)
    if gap <= 0:
        return float("inf")
    return (0.5 * log(1 / pi_min) + log(1 / (2 * eps))) / gap


def mixing_bound_from_q(n: int, q: int, gap: float, eps: float) -> float:
    """The mixing bound with π_min ≥ q^{-n}, which needs no count of colorings."""
    _require_eps(eps)
    if gap <= 0:
        return float("inf")
    return (0.5 * n * log(q) + log(1 / (2 * eps))) / gap


def _start_rows(size: int, seed: int) -> tuple[np.ndarray, bool]:
    settings = get_settings()
    if size <= settings.cap_exact_starts:
        return np.arange(size), False
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(size, size=settings.sampled_starts, replace=False)), True


def mixing_time_exact(
    chain: GlauberChain, eps: float = 0.25, *, seed: int | None = None
) -> MixingReport:
    """Step every point-mass start through P and record the worst TV to uniform.

    Chains with more states than `cap_exact_starts` use `sampled_starts` random
    starts instead, so the curve is then a lower estimate of the worst case.
    """
    _require_eps(eps)
    seed = seed if seed is not None else get_settings().seed
    size = chain.size
    spectrum = spectral_gap(chain)
    bound = mixing_bound(spectrum.absolute_gap, 1 / size, eps)
    rows, sampled = _start_rows(size, seed)

    uniform = 1 / size
    state = np.zeros((len(rows), size))
    state[np.arange(len(rows)), rows] = 1.0
    limit = STEP_ALLOWANCE * ceil(bound) + 1 if np.isfinite(bound) else STEP_ALLOWANCE * size
    curve: list[tuple[int, float]] = []
    measured = -1
    for t in range(limit + 1):
        worst = float(np.max(0.5 * np.sum(np.abs(state - uniform), axis=1)))
        curve.append((t, worst))
        if t > 0 and worst <= eps:
            measured = t
            break
        state = state @ chain.transition

    logger.info(
        "Measured mixing time",
        extra={"states": size, "t_mix": measured, "bound": bound, "sampled": sampled},
    )
    return MixingReport(
        states=size,
        spectral_gap=spectrum.gap,
        absolute_gap=spectrum.absolute_gap,
        min_eigenvalue=spectrum.min_eigenvalue,
        eps=eps,
        tv_curve=curve,
        t_mix_measured=measured,
        t_mix_bound=bound,
        sampled_starts=sampled,
        within_bound=0 < measured <= bound,
    )


@dataclass(frozen=True)
class TheoremGap:
    """Spectral-gap bound from the profile γ_k = 1/(9(n − k − 1)) against 8/(9n^{10/9})."""

    n: int
    gap: float
    reference: float

    @property
    def ok(self) -> bool:
        """Whether the aggregated profile gap meets the closed form."""
        return self.gap >= self.reference


def theorem_gap_bound(n: int) -> TheoremGap:
    """Aggregate the certified profile of an n-vertex instance, n ≥ 2."""
    if n < MIN_VERTICES:
        msg = f"need at least two vertices, got {n}"
        raise DynamicsError(msg)
    profile = [1 / (9 * (n - k - 1)) for k in range(n - 1)]
    bound = local_to_global_gap(profile)
    return TheoremGap(
        n=n, gap=1 - bound.bound, reference=THEOREM_GAP_SCALE / n**THEOREM_GAP_EXPONENT
    )
