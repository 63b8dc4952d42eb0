import numpy as np
import pytest
from numpy.testing import assert_allclose

from trickle.complex import (
    ComplexError,
    enumerate_faces,
    face_distribution,
    garland_check,
    garland_suite,
    local_spectral_profile,
    local_to_global_gap,
    local_walk,
    local_walk_spectrum,
    scalar_trickle_down,
)
from trickle.instances import ColoringInstance, cycle_instance, make_instance, pin, root


def test_face_class_sizes_count_faces(small_triangle: ColoringInstance) -> None:
    """Class sizes add up to the number of faces with a completion."""
    facets = 5 * 4 * 3
    singles = 3 * 5
    assert sum(face.size for face in enumerate_faces(small_triangle, 0)) == facets
    assert sum(face.size for face in enumerate_faces(small_triangle, 2)) == singles
    (empty,) = enumerate_faces(small_triangle, 3)
    assert empty.size == 1
    with pytest.raises(ComplexError):
        enumerate_faces(small_triangle, 4)


def test_local_walk_is_reversible(small_triangle: ColoringInstance) -> None:
    """P_τ is stochastic with stationary π_τ and top eigenvalue 1."""
    walk = local_walk(root(small_triangle))
    transition = walk.transition.data
    assert_allclose(transition.sum(axis=1), 1.0, atol=1e-12)
    assert_allclose(walk.pi.sum(), 1.0, atol=1e-12)
    assert_allclose(walk.pi @ transition, walk.pi, atol=1e-12)
    assert_allclose(walk.spectrum[0], 1.0, atol=1e-10)


def test_face_distribution_is_normalized(small_triangle: ColoringInstance) -> None:
    """π_{τ,j} is a probability distribution whose projection is π_τ."""
    pinned = root(small_triangle)
    pairs = face_distribution(pinned, 2)
    assert_allclose(pairs.total(), 1.0, atol=1e-12)
    singles = face_distribution(pinned, 1).level_one()
    walk = local_walk(pinned)
    assert_allclose([singles[x] for x in walk.index], walk.pi, atol=1e-12)


def test_reduced_spectrum_matches_dense(
    small_triangle: ColoringInstance, path: ColoringInstance
) -> None:
    """The color-class reduction reproduces the dense spectrum."""
    for pinned in (root(small_triangle), root(path), pin(path, {0: 1})):
        dense = local_walk(pinned).spectrum
        reduced = local_walk_spectrum(pinned)
        assert reduced.size == dense.size
        assert_allclose(reduced.eigenvalues, dense, atol=1e-10)


def test_garland_identities(small_triangle: ColoringInstance, path: ColoringInstance) -> None:
    """E[Π_x] = Π, E[Π_xP_x] = ΠP and E[π_xπ_xᵀ] = ΠP² on every link of four instances."""
    four_cycle = cycle_instance(4, 5)
    uneven_edge = make_instance([[1], [0]], {0: [0, 1]}, [[1, 2, 3, 4], [2, 3, 4, 5, 6]], 6)
    for instance in (small_triangle, path, four_cycle, uneven_edge):
        report = garland_suite(instance)
        assert report.passed
        assert report.links
    top = garland_check(root(path))
    assert top.max_dev_pi_p is not None


def test_profile_and_global_bound(small_triangle: ColoringInstance) -> None:
    """The profile has one entry per level and the dense and reduced forms agree."""
    profile = local_spectral_profile(small_triangle, workers=1)
    dense = local_spectral_profile(small_triangle, dense=True, workers=1)
    assert len(profile) == small_triangle.n - 1
    assert_allclose(profile, dense, atol=1e-10)
    bound = local_to_global_gap(profile)
    assert not bound.degenerate
    assert 0 < bound.gap <= 1


def test_global_bound_formula() -> None:
    """1 − (1/n)Π(1 − γ_i), flagged when some γ_i reaches 1."""
    half = 0.5
    assert_allclose(local_to_global_gap([half]).bound, 1 - half / 2)
    assert local_to_global_gap([1.0, 0.0]).degenerate
    with pytest.raises(ComplexError):
        local_to_global_gap([])


def test_scalar_trickle_down(small_triangle: ColoringInstance) -> None:
    """Classical trickle-down holds wherever it applies."""
    margins = scalar_trickle_down(small_triangle)
    assert margins
    assert all(margin.passed for margin in margins)
    assert all(np.isfinite(margin.lambda2) for margin in margins)
