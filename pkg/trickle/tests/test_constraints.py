from math import e, log, sqrt

import pytest

from trickle.certificate import build_schedule
from trickle.constraints import (
    HEADLINE_CONSTANT,
    ConstraintError,
    ConstraintSystem,
    InfeasibleBracketError,
    b_threshold,
    beta_threshold,
    bprime_threshold,
    c_of_delta,
    check_system,
    closed_form_p,
    default_iota,
    headline_ratio,
    joint_search,
    min_p_search,
    min_p_table,
    solve_bprime,
    sup_ratio,
    threshold_table,
)


def test_headline_constant_bounds_the_ratio() -> None:
    """The sup over Δ of the simplified growth term over Δ/log Δ stays below 31210."""
    value, argmax = sup_ratio()
    assert value < HEADLINE_CONSTANT
    assert value > HEADLINE_CONSTANT * 0.99
    low, high = 5e3, 5e4
    # interior maximum near log Δ = 3.5/0.375
    assert low < argmax < high
    assert headline_ratio(1.0) == 0.0


def test_iota_and_c_delta() -> None:
    """ι(1) = 1 and C = 96(1 + ι)ιe^ι."""
    assert default_iota(1) == 1.0
    assert c_of_delta(1.0) == pytest.approx(192 * e)
    assert default_iota(10) == pytest.approx(1 + 0.1 * log(10))


def test_threshold_lines() -> None:
    """Four lines per Δ, the base line fixed at 21 and the maximum reported as required."""
    base_line = 21.0
    rows = threshold_table(range(2, 6))
    assert [row.delta for row in rows] == [2, 3, 4, 5]
    for row in rows:
        assert row.line_base == base_line
        assert row.required == max(row.line_base, row.line_degree, row.line_bprime, row.line_b)
    threshold = beta_threshold(64)
    assert threshold.lines[1] == pytest.approx(64 / threshold.iota + 1)
    with pytest.raises(ConstraintError):
        beta_threshold(1)


def test_bprime_closed_form_above_threshold() -> None:
    """Above the root-existence threshold the closed-form b′ meets every inequality."""
    c1, c2, h = 4.0, 96.0, 8
    p = 1.1 * bprime_threshold(c1, c2, h)
    solution = solve_bprime(ConstraintSystem.b_prime(c1, c2, h, p))
    assert solution.feasible
    assert len(solution.values) == h
    assert solution.values[0] == pytest.approx(1 / p**2)
    assert solution.bound is not None
    assert solution.values[-1] <= solution.bound
    assert check_system(solution.values, ConstraintSystem.b_prime(c1, c2, h, p)).ok


def test_bprime_closed_form_below_threshold() -> None:
    """Below the threshold the quadratic has no real root."""
    c1, c2, h = 4.0, 96.0, 8
    p = 0.5 * bprime_threshold(c1, c2, h)
    solution = solve_bprime(ConstraintSystem.b_prime(c1, c2, h, p))
    assert not solution.feasible
    assert solution.violations[0].family == "discriminant"


def test_single_coefficient_is_the_initial_condition() -> None:
    """With H = 1 only b′_1 = 1/p² remains."""
    p = 3.0
    solution = solve_bprime(ConstraintSystem.b_prime(4.0, 96.0, 1, p))
    assert solution.values == (1 / p**2,)
    assert closed_form_p(ConstraintSystem.b_prime(4.0, 96.0, 1, p)) == 0.0
    c3 = 0.25
    assert b_threshold(1.0, 1.0, c3, 0.5, 1) == pytest.approx(1 / sqrt(c3))


def test_min_p_matches_the_threshold() -> None:
    """For b′ the bisected minimum sits at the root-existence threshold."""
    c1, c2, h = 4.0, 96.0, 8
    threshold = bprime_threshold(c1, c2, h)
    system = ConstraintSystem.b_prime(c1, c2, h, 1.0)
    found = min_p_search(system, 1.0, 1.1 * threshold, tol=1e-6)
    assert found <= 1.1 * threshold
    assert found == pytest.approx(threshold, rel=1e-3)
    assert closed_form_p(system) == pytest.approx(threshold)


def test_min_p_table_compares_with_the_closed_form() -> None:
    """Bisected minima sit at or below the closed-form p, which the table reports as slack."""
    tol = 1e-6
    c1, c2 = 4.0, 96.0
    single = ConstraintSystem.b_prime(c1, c2, 1, 1.0)
    wide = ConstraintSystem.b_prime(c1, c2, 8, 1.0)
    floor_row, threshold_row = min_p_table([single, wide], tol=tol)
    assert floor_row.closed_form_p == 0.0
    assert floor_row.below_closed_form
    assert floor_row.slack == pytest.approx(0.0, abs=tol)
    assert threshold_row.closed_form_p == pytest.approx(bprime_threshold(c1, c2, 8))
    assert threshold_row.below_closed_form
    assert threshold_row.slack >= -tol
    assert threshold_row.min_p == pytest.approx(threshold_row.closed_form_p, rel=1e-3)


def test_min_p_bracket_errors() -> None:
    """A reversed bracket or an infeasible upper end is rejected."""
    system = ConstraintSystem.b_prime(4.0, 96.0, 8, 1.0)
    with pytest.raises(ConstraintError):
        min_p_search(system, 2.0, 1.0)
    with pytest.raises(InfeasibleBracketError):
        min_p_search(system, 1.0, 2.0)


def test_system_parameter_validation() -> None:
    """H ≥ 1, positive constants and α in [1/2, 1]."""
    with pytest.raises(ConstraintError):
        ConstraintSystem.b_prime(4.0, 96.0, 0, 1.0)
    with pytest.raises(ConstraintError):
        ConstraintSystem.b_prime(-1.0, 96.0, 2, 1.0)
    with pytest.raises(ConstraintError):
        ConstraintSystem.b_full(4.0, 96.0, 0.1, 0.3, 2, 1.0)


def test_check_system_shapes() -> None:
    """Sequences must have H entries and the combined system needs b′."""
    combined = ConstraintSystem.combined(2, 100.0, 600.0)
    with pytest.raises(ConstraintError):
        check_system([0.0], combined, b_prime=[0.0, 0.0])
    with pytest.raises(ConstraintError):
        check_system([0.0, 0.0], combined)


def test_joint_search_at_large_slack() -> None:
    """Far above threshold the greedy joint solution is feasible and starts at 1/p²."""
    delta, beta = 2, 10**6
    schedule = build_schedule(delta, beta)
    report = joint_search(delta, beta, schedule.c_delta, list(schedule.b))
    assert report.feasible
    assert len(report.b) == delta
    assert report.b_prime[0] == pytest.approx(1 / (beta - 1) ** 2)
    assert report.composed_b_max == max(schedule.b)
