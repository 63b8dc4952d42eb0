from dataclasses import dataclass
from math import exp, log

from trickle.constraints import (
    ConstraintSystem,
    beta_threshold,
    c_of_delta,
    check_system,
    default_iota,
    solve_b,
    solve_bprime,
)
from trickle.logger import get_logger
from trickle.schemas import ScheduleReport

from .errors import ScheduleError

logger = get_logger(__name__)

MIN_SCHEDULE_BETA = 21
SQUARE_COEFFICIENT = 4.0
B_CAP = 0.1


@dataclass(frozen=True)
class CertificateSchedule:
    """Scalar coefficients of the certificate at maximum degree Δ and slack β.

    `a` holds a_0..a_Δ; `b_prime` and `b` hold b′_1..b′_Δ and b_1..b_Δ.
    """

    delta: int
    beta: int
    iota: float
    gamma: float
    c_delta: float
    a: tuple[float, ...]
    b_prime: tuple[float, ...]
    b: tuple[float, ...]
    beta_required: float
    feasible: bool
    violations: int

    @property
    def undersized(self) -> bool:
        """Whether β falls short of the slack lines."""
        return self.beta < self.beta_required

    def a_of(self, h: int) -> float:
        """a_h, with a_0 = 0."""
        return self.a[h]

    def b_prime_of(self, h: int) -> float:
        """b′_h for 1 ≤ h ≤ Δ."""
        return self.b_prime[h - 1]

    def b_of(self, h: int) -> float:
        """b_h for 1 ≤ h ≤ Δ."""
        return self.b[h - 1]

    def report(self) -> ScheduleReport:
        """Serializable form."""
        return ScheduleReport(
            delta=self.delta,
            beta=self.beta,
            iota=self.iota,
            gamma=self.gamma,
            c_delta=self.c_delta,
            a=list(self.a),
            b_prime=list(self.b_prime),
            b=list(self.b),
            beta_required=self.beta_required,
            feasible=self.feasible,
            undersized=self.undersized,
            violations=self.violations,
        )


def _b_prime_values(delta: int, p: float, c_delta: float) -> tuple[float, ...]:
    solution = solve_bprime(ConstraintSystem.b_prime(SQUARE_COEFFICIENT, c_delta, delta, p))
    if solution.values:
        return solution.values
    # no real root: fall back to the root's upper bound so construction can go on
    eta = 8 * SQUARE_COEFFICIENT / p**2 + 4 * c_delta
    return tuple((1 + eta * log(h)) / p**2 for h in range(1, delta + 1))


def _b_values(
    delta: int, p: float, c_delta: float, b_prime: tuple[float, ...]
) -> tuple[float, ...]:
    if delta == 1:
        return b_prime
    big_l = log(delta)
    system = ConstraintSystem.b_full(
        SQUARE_COEFFICIENT, 1 / (5 * big_l), B_CAP, 0.5, delta, p / (5 * c_delta * big_l) ** 0.5
    )
    return solve_b(system).values


def build_schedule(
    delta: int, beta: int, iota: float | None = None, *, allow_undersized: bool = False
) -> CertificateSchedule:
    """Coefficients a_h, b′_h and b_h for maximum degree `delta` and slack `beta`.

    b′ is the closed-form solution of its own system with (C₁, C₂, H, p) =
    (4, C(Δ), Δ, β − 1). b is the closed form
    5C(Δ)log Δ(1 + (6 log Δ + 16/5)h log h)/(β − 1)², which starts at
    b_1 = 5C(Δ)log Δ/(β − 1)². The combined system is then checked directly.
    """
    if delta < 1:
        msg = f"maximum degree must be positive, got {delta}"
        raise ScheduleError(msg)
    if beta < MIN_SCHEDULE_BETA and not allow_undersized:
        msg = f"schedule needs β ≥ {MIN_SCHEDULE_BETA}, got {beta}"
        raise ScheduleError(msg)
    if beta <= 1:
        msg = f"schedule needs β > 1, got {beta}"
        raise ScheduleError(msg)
    iota = iota if iota is not None else default_iota(delta)
    c_delta = c_of_delta(iota)
    gamma = 2 * (1 + iota) * exp(iota) / (beta - 1)
    a = (0.0, *(1 / (1 + 4 * gamma * (h - 1)) for h in range(1, delta + 1)))
    p = float(beta - 1)
    b_prime = _b_prime_values(delta, p, c_delta)
    b = _b_values(delta, p, c_delta, b_prime)
    check = check_system(b, ConstraintSystem.combined(delta, beta, c_delta), b_prime=b_prime)
    required = (
        beta_threshold(delta, iota).required
        if delta > 1
        else float(MIN_SCHEDULE_BETA)
    )
    schedule = CertificateSchedule(
        delta=delta,
        beta=beta,
        iota=iota,
        gamma=gamma,
        c_delta=c_delta,
        a=a,
        b_prime=b_prime,
        b=b,
        beta_required=required,
        feasible=check.ok,
        violations=len(check.violations),
    )
    logger.info(
        "Built certificate schedule",
        extra={
            "delta": delta,
            "beta": beta,
            "feasible": schedule.feasible,
            "undersized": schedule.undersized,
        },
    )
    return schedule
