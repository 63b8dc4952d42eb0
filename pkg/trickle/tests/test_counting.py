import math
from fractions import Fraction

import pytest
from numpy.testing import assert_allclose

from trickle.counting import (
    Backend,
    CountingError,
    check_marginal_bounds,
    count_extensions,
    marginal,
    marginal_recursive,
    marginals,
)
from trickle.errors import CapExceededError
from trickle.instances import ColoringInstance, cycle_instance, make_instance, pin, root


def test_triangle_count(triangle: ColoringInstance) -> None:
    """A triangle with 8 colors has 8·7·6 proper colorings."""
    expected = 8 * 7 * 6
    assert count_extensions(root(triangle)).value == expected
    assert count_extensions(root(triangle), backend=Backend.SYMMETRY).value == expected
    assert count_extensions(root(triangle), backend=Backend.ENUMERATE).value == expected


def test_cycle_count_matches_chromatic_polynomial() -> None:
    """C_4 with three colors: (q − 1)^4 + (q − 1) = 18."""
    q = 3
    instance = cycle_instance(4, q, require_slack=False)
    expected = (q - 1) ** 4 + (q - 1)
    assert count_extensions(root(instance)).value == expected
    assert count_extensions(root(instance), backend=Backend.SYMMETRY).value == expected


def test_auto_backend_switches_over_the_cap(triangle: ColoringInstance) -> None:
    """Above `cap_enum` the color-class backend takes over; forcing enumeration fails."""
    cap = 10
    count = count_extensions(root(triangle), cap_enum=cap)
    assert count.backend is Backend.SYMMETRY
    assert int(count) == 8 * 7 * 6
    with pytest.raises(CapExceededError):
        count_extensions(root(triangle), backend=Backend.ENUMERATE, cap_enum=cap)


def test_each_component_reports_its_backend() -> None:
    """A small component is enumerated while a large one goes through color classes."""
    instance = make_instance(
        [[], [2], [1]],
        {0: [0], 1: [1, 2]},
        [[1, 2], range(1, 9), range(1, 9)],
        8,
        require_slack=False,
    )
    cap = 10
    count = count_extensions(root(instance), cap_enum=cap)
    assert count.value == 2 * 8 * 7
    assert count.backends == (Backend.ENUMERATE, Backend.SYMMETRY)
    assert count.backend is Backend.AUTO
    assert count_extensions(root(instance)).backends == (Backend.ENUMERATE, Backend.ENUMERATE)
    assert count_extensions(pin(instance, {0: 1, 1: 1, 2: 2})).backends == ()


def test_free_edge_marginals(free_edge: ColoringInstance) -> None:
    """The free edge splits u's colors 1/4, 1/4, 1/2 and v's evenly."""
    probabilities = marginals(root(free_edge))
    assert probabilities.for_vertex(0) == {1: 0.25, 2: 0.25, 3: 0.5}
    assert probabilities.for_vertex(1) == {1: 0.5, 2: 0.5}
    assert marginal(root(free_edge), {0: 3}, exact=True) == Fraction(1, 2)


def test_improper_omega_has_zero_marginal(free_edge: ColoringInstance) -> None:
    """Giving both endpoints the same color is impossible."""
    assert marginal(root(free_edge), {0: 1, 1: 1}) == 0.0


def test_marginal_rejects_pinned_vertices(triangle: ColoringInstance) -> None:
    """ω may only color free vertices."""
    with pytest.raises(CountingError):
        marginal(pin(triangle, {0: 1}), {0: 2})


def test_recursion_matches_exact_marginals(path: ColoringInstance) -> None:
    """The vertex-removal recursion is exact."""
    pinned = pin(path, {0: 1})
    exact = marginals(pinned)
    for (v, c), p in exact.entries.items():
        assert_allclose(marginal_recursive(pinned, v, c), p, atol=1e-10)


def test_marginal_bounds_hold(triangle: ColoringInstance, path: ColoringInstance) -> None:
    """(1 − 1/β)^{Δ(u)}/ℓ_u ≤ μ_u(c) ≤ 1/(ℓ_u − Δ(u)) at every element."""
    for pinned in (root(triangle), pin(triangle, {0: 1}), root(path), pin(path, {1: 2})):
        for v, c in pinned.elements():
            assert check_marginal_bounds(pinned, v, c).ok


def test_marginal_bounds_without_spare_colors() -> None:
    """A list no longer than the degree leaves the upper bound undefined."""
    instance = make_instance([[1], [0]], {0: [0, 1]}, [[1], [1, 2]], 2, require_slack=False)
    tight = check_marginal_bounds(root(instance), 0, 1)
    assert not tight.applicable
    assert tight.ok
    assert tight.upper == math.inf
    assert tight.lower == 0.0
    assert tight.value == 1.0
    beta = 2
    forced = check_marginal_bounds(root(instance), 0, 1, beta=beta)
    assert not forced.applicable
    assert forced.lower == pytest.approx(0.5)
    assert forced.ok
