from dataclasses import dataclass, field
from math import log, sqrt

import numpy as np

from trickle.logger import get_logger

from .errors import ConstraintError
from .systems import RELATIVE_TOLERANCE, ConstraintSystem, Slack, SystemKind, check_system

logger = get_logger(__name__)


@dataclass(frozen=True)
class CoefficientSolution:
    """A closed-form coefficient sequence and its direct check."""

    values: tuple[float, ...]
    eta: float
    violations: list[Slack] = field(default_factory=list)
    bound: float | None = None

    @property
    def feasible(self) -> bool:
        """Whether every inequality holds."""
        return not self.violations


def _require(system: ConstraintSystem, kind: SystemKind) -> None:
    if system.kind is not kind:
        msg = f"expected a {kind} system, got {system.kind}"
        raise ConstraintError(msg)


def bprime_threshold(c1: float, c2: float, h: int) -> float:
    """Smallest p for which the b′ quadratic has a real root."""
    big_l = log(h)
    return 2 * sqrt(2 * c1 * big_l * (sqrt(1 + 4 * c2**2 * big_l**2) + 2 * c2 * big_l))


def solve_bprime(system: ConstraintSystem) -> CoefficientSolution:
    """b′_h = (1 + η log h)/p², η the smaller root of 4C₁log²H·η² − p²η + 2p²C₂ + 4C₁.

    A negative discriminant leaves the system without this solution; the
    result then carries a single `discriminant` violation.
    """
    _require(system, SystemKind.B_PRIME)
    c1, c2, h, p = system.c1, system.c2, system.h, system.p
    if h == 1:
        return CoefficientSolution(values=(1 / p**2,), eta=0.0, bound=1 / p**2)
    big_l = log(h)
    quad = 4 * c1 * big_l**2
    disc = p**4 - 4 * quad * (2 * p**2 * c2 + 4 * c1)
    if disc < 0:
        if disc < -RELATIVE_TOLERANCE * p**4:
            return CoefficientSolution(
                values=(), eta=float("nan"), violations=[Slack("discriminant", 0, disc, p**4)]
            )
        disc = 0.0
    eta = (p**2 - sqrt(disc)) / (2 * quad)
    eta_cap = 8 * c1 / p**2 + 4 * c2
    if eta > eta_cap * (1 + RELATIVE_TOLERANCE):
        msg = f"root η={eta} exceeds 8C₁/p² + 4C₂ = {eta_cap}"
        raise ConstraintError(msg)
    hs = np.arange(1, h + 1, dtype=float)
    values = (1 + eta * np.log(hs)) / p**2
    bound = (1 + eta_cap * big_l) / p**2
    violations = check_system(values, system).violations
    return CoefficientSolution(tuple(values.tolist()), eta, violations, bound)


def b_threshold(c1: float, c2: float, c3: float, alpha: float, h: int) -> float:
    """Sufficient p for the b system; 1/√C₃ when H = 1."""
    if h == 1:
        return 1 / sqrt(c3)
    c = max(sqrt(8 * c1), sqrt(2 / c3)) * sqrt(1 + 2 * c2)
    return c * h**alpha * log(h) ** 2 + 2 * c


def solve_b(system: ConstraintSystem) -> CoefficientSolution:
    """b_h = (1 + η(H^{2α−1}log H)·h log h)/p² with η = 6 + 16C₂, checked directly."""
    _require(system, SystemKind.B_FULL)
    c2, h, p = system.c2, system.h, system.p
    alpha = system.alpha if system.alpha is not None else 0.5
    eta = 6 + 16 * c2
    hs = np.arange(1, h + 1, dtype=float)
    growth = h ** (2 * alpha - 1) * log(h) if h > 1 else 0.0
    values = (1 + eta * growth * hs * np.log(hs)) / p**2
    violations = check_system(values, system).violations
    if violations:
        logger.debug(
            "b system violated",
            extra={"p": p, "h": h, "first": violations[0].family, "index": violations[0].index},
        )
    return CoefficientSolution(tuple(values.tolist()), eta, violations, float(values[-1]))
