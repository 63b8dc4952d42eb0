"""Slack thresholds on β and the headline constant."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import product
from math import exp, log, sqrt

import numpy as np
from scipy import optimize

from trickle.logger import get_logger
from trickle.schemas import MinPRow, ThresholdRow

from .errors import ConstraintError
from .search import min_p_search
from .solutions import b_threshold, bprime_threshold
from .systems import ConstraintSystem, SystemKind

logger = get_logger(__name__)

BASE_LINE = 21.0
EPS0 = 1e-4
HEADLINE_CONSTANT = 31210.0
SIMPLIFIED_SCALE = 416.0
SWEEP_POINTS = 4096
SWEEP_LOG_MAX = 40.0
MIN_P_FLOOR = 1e-3
MIN_P_WIDEN = 4.0
MIN_DELTA = 2


def default_iota(delta: float) -> float:
    """ι(Δ) = 1 + 0.1 log Δ."""
    return 1 + 0.1 * log(delta)


def c_of_delta(iota: float) -> float:
    """C(Δ) = 96(1 + ι)ι e^ι."""
    return 96 * (1 + iota) * iota * exp(iota)


def simplified_bound(delta: float) -> float:
    """max{10Δ/log Δ, 416(Δ^0.625 log^{5/2}Δ + 2Δ^0.125 log^{1/2}Δ)} + 1."""
    big_l = log(delta)
    degree = 10 * delta / big_l
    growth = SIMPLIFIED_SCALE * (delta**0.625 * big_l**2.5 + 2 * delta**0.125 * big_l**0.5)
    return max(degree, growth) + 1


@dataclass(frozen=True)
class BetaThreshold:
    """The four slack lines and their simplifications at one maximum degree."""

    delta: int
    iota: float
    c_delta: float
    lines: tuple[float, float, float, float]
    simplified: float
    lemma_exact: float
    eps0_form: float

    @property
    def required(self) -> float:
        """The largest line."""
        return max(self.lines)

    def row(self) -> ThresholdRow:
        """CSV-ready form."""
        base, degree, bprime, b = self.lines
        return ThresholdRow(
            delta=self.delta,
            iota=self.iota,
            c_delta=self.c_delta,
            line_base=base,
            line_degree=degree,
            line_bprime=bprime,
            line_b=b,
            required=self.required,
            simplified=self.simplified,
            lemma_exact=self.lemma_exact,
            eps0_form=self.eps0_form,
            simplified_dominates=self.simplified >= self.required,
        )


def beta_threshold(delta: int, iota: float | None = None) -> BetaThreshold:
    """Evaluate the four lower bounds on β at maximum degree `delta`.

    The b′ line is the strengthened 4√(10C(Δ))log Δ + 1. `lemma_exact` is the
    root-existence threshold of the b′ quadratic and `eps0_form` the
    4√(2(4+ε₀)C(Δ))log Δ + 1 variant.
    """
    if delta < MIN_DELTA:
        msg = f"thresholds need Δ ≥ 2, got {delta}"
        raise ConstraintError(msg)
    iota = iota if iota is not None else default_iota(delta)
    c_delta = c_of_delta(iota)
    big_l = log(delta)
    c = 4 * sqrt(2 * (1 + 2 / (5 * big_l)))
    lines = (
        BASE_LINE,
        delta / iota + 1,
        4 * sqrt(10 * c_delta) * big_l + 1,
        (c * sqrt(delta) * big_l**2 + 2 * c) * sqrt(5 * c_delta * big_l) + 1,
    )
    return BetaThreshold(
        delta=delta,
        iota=iota,
        c_delta=c_delta,
        lines=lines,
        simplified=simplified_bound(delta),
        lemma_exact=bprime_threshold(4.0, c_delta, delta) + 1,
        eps0_form=4 * sqrt(2 * (4 + EPS0) * c_delta) * big_l + 1,
    )


def threshold_table(deltas: Iterable[int], iota: float | None = None) -> list[ThresholdRow]:
    """One row per maximum degree."""
    return [beta_threshold(delta, iota).row() for delta in deltas]


def headline_ratio(delta: float) -> float:
    """416(Δ^0.625 log^{5/2}Δ + 2Δ^0.125 log^{1/2}Δ)/(Δ/log Δ); 0 at Δ = 1."""
    if delta <= 1:
        return 0.0
    big_l = log(delta)
    growth = SIMPLIFIED_SCALE * (delta**0.625 * big_l**2.5 + 2 * delta**0.125 * big_l**0.5)
    return growth * big_l / delta


def sup_ratio() -> tuple[float, float]:
    """Supremum over real Δ ≥ 1 of `headline_ratio`, with its maximizer.

    A grid on log Δ brackets the interior maximum, then a bounded scalar
    search refines it.
    """
    grid = np.linspace(0.0, SWEEP_LOG_MAX, SWEEP_POINTS)
    values = np.array([headline_ratio(float(np.exp(t))) for t in grid])
    best = int(np.argmax(values))
    left = grid[max(best - 1, 0)]
    right = grid[min(best + 1, grid.size - 1)]
    result = optimize.minimize_scalar(
        lambda t: -headline_ratio(float(np.exp(t))),
        bounds=(float(left), float(right)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    refined = -float(result.fun)
    if refined >= values[best]:
        value, argmax = refined, float(np.exp(result.x))
    else:
        value, argmax = float(values[best]), float(np.exp(grid[best]))
    logger.info("Headline ratio sweep", extra={"sup": value, "argmax": argmax})
    return value, argmax


def closed_form_p(system: ConstraintSystem) -> float:
    """The lemma's sufficient p for `system`."""
    if system.kind is SystemKind.B_PRIME:
        return bprime_threshold(system.c1, system.c2, system.h) if system.h > 1 else 0.0
    return b_threshold(
        system.c1, system.c2, system.c3 or 0.1, system.alpha or 0.5, system.h
    )


def lemma_grid() -> Iterator[ConstraintSystem]:
    """The parameter grid over which both closed forms are checked."""
    c1s, c2s, c3s = (1.0, 4.0, 10.0), (1.0, 96.0, 500.0), (0.1, 1.0)
    alphas, hs = (0.5, 0.75, 1.0), (1, 2, 8, 64, 1024)
    for c1, c2, h in product(c1s, c2s, hs):
        yield ConstraintSystem.b_prime(c1, c2, h, 1.0)
    for c1, c2, c3, alpha, h in product(c1s, c2s, c3s, alphas, hs):
        yield ConstraintSystem.b_full(c1, c2, c3, alpha, h, 1.0)


def min_p_table(grid: Iterable[ConstraintSystem], tol: float = 1e-6) -> list[MinPRow]:
    """Closed-form sufficient p next to the bisected minimum, per system.

    The search bracket reaches past the closed form, so a closed form that is
    not sufficient shows up as a minimum above it. Closed forms under the
    search floor are compared at the floor.
    """
    rows = []
    for system in grid:
        closed = closed_form_p(system)
        reference = max(closed, MIN_P_FLOOR)
        hi = reference * MIN_P_WIDEN
        found = min_p_search(system.with_p(hi), MIN_P_FLOOR, hi, tol)
        rows.append(
            MinPRow(
                kind=str(system.kind),
                c1=system.c1,
                c2=system.c2,
                c3=system.c3,
                alpha=system.alpha,
                h=system.h,
                closed_form_p=closed,
                min_p=found,
                slack=reference - found,
                below_closed_form=found <= reference + tol,
            )
        )
        if not rows[-1].below_closed_form:
            logger.warning(
                "Closed-form p is not sufficient",
                extra={"kind": str(system.kind), "h": system.h, "closed": closed, "found": found},
            )
    return rows
