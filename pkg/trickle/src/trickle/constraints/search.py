from collections.abc import Callable
from math import sqrt

import numpy as np

from trickle.logger import get_logger
from trickle.schemas import JointSearchReport

from .errors import ConstraintError, InfeasibleBracketError
from .solutions import CoefficientSolution, solve_b, solve_bprime
from .systems import ConstraintSystem, SystemKind, check_system

logger = get_logger(__name__)

MONOTONE_SAMPLES = 9


def _solver(system: ConstraintSystem) -> Callable[[ConstraintSystem], CoefficientSolution]:
    if system.kind is SystemKind.B_PRIME:
        return solve_bprime
    if system.kind is SystemKind.B_FULL:
        return solve_b
    msg = "minimal p search runs on the b′ and b systems only"
    raise ConstraintError(msg)


def min_p_search(system: ConstraintSystem, lo: float, hi: float, tol: float = 1e-6) -> float:
    """Bisect for the smallest p in [lo, hi] at which the closed-form ansatz passes.

    Returns the feasible end of the final bracket, so the result never exceeds `hi`.
    """
    if not 0 < lo < hi:
        msg = f"bad bracket [{lo}, {hi}]"
        raise ConstraintError(msg)
    solve = _solver(system)

    def feasible(p: float) -> bool:
        return solve(system.with_p(p)).feasible

    if not feasible(hi):
        msg = f"system infeasible at the upper end p={hi}"
        raise InfeasibleBracketError(msg)
    samples = [feasible(float(p)) for p in np.linspace(lo, hi, MONOTONE_SAMPLES)]
    if any(a and not b for a, b in zip(samples, samples[1:], strict=False)):
        logger.warning(
            "Feasibility is not monotone in p", extra={"kind": system.kind, "h": system.h}
        )
    if feasible(lo):
        return lo
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _smallest_root(quadratic: float, linear: float, constant: float) -> float | None:
    """Smallest x with quadratic·x² − linear·x + constant ≤ 0, or None."""
    disc = linear**2 - 4 * quadratic * constant
    if disc < 0:
        return None
    return (linear - sqrt(disc)) / (2 * quadratic)


def _greedy(
    first: float, steps: int, step: Callable[[int, float], float | None]
) -> list[float] | None:
    values = [first]
    for h in range(2, steps + 1):
        x = step(h, values[-1])
        if x is None:
            return None
        values.append(x)
    return values


def joint_search(
    delta: int, beta: float, c_delta: float, composed_b: list[float]
) -> JointSearchReport:
    """Smallest feasible b′ and b for the combined system, one inequality at a time.

    Each inductive inequality is a quadratic in its newest coefficient; taking the
    smaller root keeps every later inequality as loose as possible. The result is
    compared with the composed closed-form b sequence.
    """
    system = ConstraintSystem.combined(delta, beta, c_delta)
    p2 = system.p**2
    c1, c2 = system.c1, system.c2
    primes = _greedy(
        1 / p2,
        delta,
        lambda h, prev: _smallest_root(c1, h - 1, (h - 1) * prev + c2 / p2),
    )
    values: list[float] | None = None
    if primes is not None:
        values = _greedy(
            max(primes),
            delta,
            lambda h, prev: _smallest_root(c1, h - 1, h * prev + c2 * h / p2),
        )
    feasible = False
    if primes is not None and values is not None:
        feasible = check_system(values, system, b_prime=primes).ok
    composed_max = max(composed_b)
    joint_max = max(values) if values else float("inf")
    logger.info(
        "Joint search",
        extra={"delta": delta, "beta": beta, "feasible": feasible, "joint_b_max": joint_max},
    )
    return JointSearchReport(
        delta=delta,
        beta=int(beta),
        feasible=feasible,
        b_prime=primes or [],
        b=values or [],
        composed_b_max=composed_max,
        joint_b_max=joint_max,
        improves=feasible and joint_max < composed_max,
    )
