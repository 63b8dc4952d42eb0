"""Inequality systems on coefficient sequences indexed 1..H.

All logarithms are natural.
"""

from collections.abc import Sequence
from dataclasses import dataclass, replace
from enum import StrEnum

import numpy as np

from trickle.specmat import Array

from .errors import ConstraintError

RELATIVE_TOLERANCE = 1e-12
ALPHA_RANGE = (0.5, 1.0)


class SystemKind(StrEnum):
    """The three systems: b′ alone, b alone, and the combined certificate system."""

    B_PRIME = "b-prime"
    B_FULL = "b-full"
    COMBINED = "combined"


@dataclass(frozen=True)
class ConstraintSystem:
    """Parameters of one system.

    For the combined system `c1` is the coefficient of the squared terms
    (4), `c2` is C(Δ), `c3` the cap on b (1/10) and `p` is β − 1.
    """

    kind: SystemKind
    c1: float
    c2: float
    h: int
    p: float
    c3: float | None = None
    alpha: float | None = None

    def __post_init__(self) -> None:
        """Validate parameter ranges."""
        if self.h < 1:
            msg = f"H must be at least 1, got {self.h}"
            raise ConstraintError(msg)
        if min(self.c1, self.c2, self.p) <= 0:
            msg = "C1, C2 and p must be positive"
            raise ConstraintError(msg)
        if self.kind is not SystemKind.B_PRIME and (self.c3 is None or self.c3 <= 0):
            msg = f"system {self.kind} needs a positive C3"
            raise ConstraintError(msg)
        if self.kind is SystemKind.B_FULL:
            low, high = ALPHA_RANGE
            if self.alpha is None or not low <= self.alpha <= high:
                msg = f"alpha must lie in [1/2, 1], got {self.alpha}"
                raise ConstraintError(msg)

    @classmethod
    def b_prime(cls, c1: float, c2: float, h: int, p: float) -> "ConstraintSystem":
        """The b′ system (▼)."""
        return cls(SystemKind.B_PRIME, c1, c2, h, p)

    @classmethod
    def b_full(
        cls, c1: float, c2: float, c3: float, alpha: float, h: int, p: float
    ) -> "ConstraintSystem":
        """The b system (★)."""
        return cls(SystemKind.B_FULL, c1, c2, h, p, c3=c3, alpha=alpha)

    @classmethod
    def combined(cls, delta: int, beta: float, c_delta: float) -> "ConstraintSystem":
        """The certificate system (▲) at maximum degree Δ and slack β."""
        return cls(SystemKind.COMBINED, 4.0, c_delta, delta, beta - 1, c3=0.1)

    def with_p(self, p: float) -> "ConstraintSystem":
        """Copy with a different p."""
        return replace(self, p=p)


@dataclass(frozen=True)
class Slack:
    """Signed slack of one inequality; negative beyond tolerance means violated."""

    family: str
    index: int
    slack: float
    scale: float

    @property
    def violated(self) -> bool:
        """Whether the slack is below −1e−12 relative to the terms involved."""
        return self.slack < -RELATIVE_TOLERANCE * max(1.0, self.scale)


@dataclass(frozen=True)
class SystemCheck:
    """Every evaluated inequality of a system."""

    slacks: list[Slack]

    @property
    def violations(self) -> list[Slack]:
        """Slacks that fail."""
        return [s for s in self.slacks if s.violated]

    @property
    def ok(self) -> bool:
        """Whether nothing fails."""
        return not self.violations


def _family(name: str, lhs: Array, rhs: Array, start: int) -> list[Slack]:
    slack = lhs - rhs
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    return [
        Slack(name, start + j, float(s), float(m))
        for j, (s, m) in enumerate(zip(slack, scale, strict=True))
    ]


def _initial(values: Array, p: float) -> list[Slack]:
    target = 1 / p**2
    return [Slack("initial", 1, -abs(float(values[0]) - target), target)]


def _b_prime_steps(values: Array, c1: float, c2: float, p: float) -> list[Slack]:
    h = np.arange(2, values.size + 1, dtype=float)
    lhs = (h - 1) * (values[1:] - values[:-1])
    rhs = c1 * values[1:] ** 2 + c2 / p**2
    return _family("inductive", lhs, rhs, 2)


def _b_steps(values: Array, c1: float, c2: float, p: float, power: float) -> list[Slack]:
    h = np.arange(2, values.size + 1, dtype=float)
    lhs = (h - 1) * values[1:] - h * values[:-1]
    rhs = c1 * values[1:] ** 2 + (c2 / p**2) * h**power
    return _family("inductive", lhs, rhs, 2)


def _cap(values: Array, c3: float) -> list[Slack]:
    return _family("cap", np.full(values.size, c3), values, 1)


def check_system(
    values: Sequence[float] | Array,
    system: ConstraintSystem,
    *,
    b_prime: Sequence[float] | Array | None = None,
) -> SystemCheck:
    """Evaluate every inequality of `system` literally on `values`.

    For the combined system `values` is the b sequence and `b_prime` the b′
    sequence; both families are checked together with b′_h ≤ b_1 and b_h ≤ C3.
    """
    array = np.asarray(values, dtype=float)
    if array.size != system.h:
        msg = f"expected {system.h} values, got {array.size}"
        raise ConstraintError(msg)
    c1, c2, p = system.c1, system.c2, system.p
    if system.kind is SystemKind.B_PRIME:
        return SystemCheck(_initial(array, p) + _b_prime_steps(array, c1, c2, p))
    if system.kind is SystemKind.B_FULL:
        power = 2 * (system.alpha or 0.5)
        slacks = _initial(array, p) + _b_steps(array, c1, c2, p, power)
        return SystemCheck(slacks + _cap(array, system.c3 or 0.0))
    if b_prime is None:
        msg = "the combined system needs the b′ sequence"
        raise ConstraintError(msg)
    primes = np.asarray(b_prime, dtype=float)
    if primes.size != system.h:
        msg = f"expected {system.h} b′ values, got {primes.size}"
        raise ConstraintError(msg)
    slacks = _initial(primes, p) + _b_prime_steps(primes, c1, c2, p)
    slacks += _family("coupling", np.full(primes.size, array[0]), primes, 1)
    # b carries an extra factor h on the C(Δ) term
    slacks += _b_steps(array, c1, c2, p, 1.0)
    return SystemCheck(slacks + _cap(array, system.c3 or 0.0))
