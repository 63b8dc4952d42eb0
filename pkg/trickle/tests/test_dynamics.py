import numpy as np
import pytest
from numpy.testing import assert_allclose

from trickle.dynamics import (
    DynamicsError,
    InitialColoringError,
    TooManyFacetsError,
    glauber_chain,
    glauber_matrix,
    greedy_coloring,
    marginal_z_scores,
    mixing_bound,
    mixing_bound_from_q,
    mixing_time_exact,
    simulate,
    spectral_gap,
    theorem_gap_bound,
)
from trickle.errors import CapExceededError
from trickle.instances import ColoringInstance, make_instance


def test_single_vertex_mixes_in_one_step() -> None:
    """Resampling the only vertex lands exactly on uniform."""
    instance = make_instance([[]], {0: [0]}, [[1, 2, 3]], 3, require_slack=False)
    report = mixing_time_exact(glauber_chain(instance))
    assert report.states == len(instance.lists[0])
    assert report.t_mix_measured == 1
    assert report.within_bound
    assert report.tv_curve[0][0] == 0
    assert report.tv_curve[-1][1] == pytest.approx(0.0)


def test_free_edge_chain(free_edge: ColoringInstance) -> None:
    """Four colorings on a lazy path: eigenvalues 1, 1 − (2 ∓ √2)/4 and 1/2."""
    chain = glauber_chain(free_edge)
    states = 4
    assert chain.size == states
    assert set(chain.states) == {(1, 2), (2, 1), (3, 1), (3, 2)}
    assert chain.detailed_balance_deviation == 0.0
    assert chain.stationarity_deviation <= 1e-12
    assert_allclose(chain.dense().sum(axis=1), 1.0)
    spectrum = spectral_gap(chain)
    assert spectrum.lambda2 == pytest.approx(1 - (2 - np.sqrt(2)) / 4)
    assert spectrum.min_eigenvalue == pytest.approx(1 - (2 + np.sqrt(2)) / 4)
    assert spectrum.absolute_gap == pytest.approx(spectrum.gap)


def test_glauber_matrix_is_labeled_by_colorings(free_edge: ColoringInstance) -> None:
    """The labeled transition matrix is stochastic and symmetric under the uniform law."""
    chain = glauber_chain(free_edge)
    matrix = glauber_matrix(free_edge)
    assert matrix.index == tuple(chain.states)
    assert_allclose(matrix.data, chain.dense())
    assert_allclose(matrix.data, matrix.data.T)
    assert_allclose(matrix.data.sum(axis=1), 1.0)


def test_free_edge_mixing_time(free_edge: ColoringInstance) -> None:
    """The worst start needs six steps to come within 1/4, inside the spectral bound."""
    report = mixing_time_exact(glauber_chain(free_edge), eps=0.25)
    t_mix = 6
    assert report.t_mix_measured == t_mix
    assert report.within_bound
    assert report.t_mix_bound == pytest.approx(
        mixing_bound(report.absolute_gap, 1 / report.states, 0.25)
    )
    assert not report.sampled_starts


def test_mixing_bound_edges() -> None:
    """A zero gap gives no bound and ε must lie in (0, 1)."""
    n, q, gap = 3, 5, 0.2
    assert mixing_bound_from_q(n, q, gap, 0.25) == pytest.approx(mixing_bound(gap, q**-n, 0.25))
    assert mixing_bound(0.0, 0.5, 0.25) == float("inf")
    with pytest.raises(DynamicsError):
        mixing_bound(0.5, 0.5, 1.0)


def test_chain_size_cap(free_edge: ColoringInstance) -> None:
    """Too many colorings for the exact chain is a cap error."""
    with pytest.raises(TooManyFacetsError):
        glauber_chain(free_edge, cap=2)
    with pytest.raises(CapExceededError):
        glauber_chain(free_edge, cap=2)


def test_simulation_is_reproducible(triangle: ColoringInstance) -> None:
    """Same seed, same chains, whatever the worker count."""
    first = simulate(triangle, 500, seed=11, chains=3, workers=1)
    second = simulate(triangle, 500, seed=11, chains=3, workers=3)
    assert first.model_dump(exclude={"runtime"}) == second.model_dump(exclude={"runtime"})
    other = simulate(triangle, 500, seed=12, chains=3)
    assert other.chains[0].final_coloring != first.chains[0].final_coloring or (
        other.chains[0].acceptance_rate != first.chains[0].acceptance_rate
    )


def test_simulated_marginals_match_exact(free_edge: ColoringInstance) -> None:
    """Thinned samples from a long chain agree with the exact marginals."""
    report = simulate(free_edge, 10**5, seed=3, thin=50)
    (summary,) = report.chains
    samples = 2000
    assert summary.samples == samples
    scores = marginal_z_scores(summary, free_edge)
    limit = 3.0
    assert all(abs(z) <= limit for z in scores.values())


def test_starting_colorings(triangle: ColoringInstance) -> None:
    """Greedy gives 1, 2, 3 on a triangle; improper starts are refused."""
    assert greedy_coloring(triangle) == (1, 2, 3)
    with pytest.raises(InitialColoringError):
        simulate(triangle, 10, start=[1, 1, 2])
    with pytest.raises(DynamicsError):
        simulate(triangle, 10, thin=0)


def test_greedy_can_get_stuck() -> None:
    """A middle vertex that takes the last color of its right neighbor."""
    instance = make_instance(
        [[1], [0, 2], [1]], {0: [0, 1], 1: [1, 2]}, [[1], [1, 2], [2]], 2, require_slack=False
    )
    with pytest.raises(InitialColoringError):
        greedy_coloring(instance)


def test_theorem_gap_reference() -> None:
    """The certified profile aggregates to at least 8/(9n^{10/9})."""
    for n in range(2, 51):
        assert theorem_gap_bound(n).ok
    with pytest.raises(DynamicsError):
        theorem_gap_bound(1)
