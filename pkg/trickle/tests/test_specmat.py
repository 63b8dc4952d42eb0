import numpy as np
import pytest
from numpy.testing import assert_allclose

from trickle.specmat import (
    AsymmetricMatrixError,
    IndexMismatchError,
    LabeledMatrix,
    NegativeDiagonalError,
    eigenvalues,
    lemma_property_suite,
    loewner_leq,
    monotone_inverse,
    pinv_diag,
    row_sum_bound,
    spectral_radius,
)


def test_loewner_order_on_identity() -> None:
    """0 ⪯ I holds and I ⪯ 0 fails by exactly one."""
    size = 3
    zero, identity = np.zeros((size, size)), np.eye(size)
    assert loewner_leq(zero, identity).passed
    report = loewner_leq(identity, zero, label="reverse")
    assert not report.passed
    assert report.verdict == "fail"
    assert report.label == "reverse"
    assert_allclose(report.min_eig_diff, -1.0)


def test_labeled_matrices_need_a_shared_index() -> None:
    """Arithmetic and comparisons across indices fail."""
    a = LabeledMatrix.zeros([(0, 1), (1, 1)])
    b = LabeledMatrix.zeros([(0, 1), (1, 2)])
    with pytest.raises(IndexMismatchError):
        _ = a + b
    with pytest.raises(IndexMismatchError):
        loewner_leq(a, b)
    with pytest.raises(IndexMismatchError):
        LabeledMatrix(((0, 1), (0, 1)), np.zeros((2, 2)))


def test_reindex_fills_zeros() -> None:
    """Missing labels come back as zero rows and columns."""
    m = LabeledMatrix.diagonal(["a", "b"], [1.0, 2.0])
    moved = m.reindex(["b", "c", "a"])
    two = 2.0
    assert moved["b", "b"] == two
    assert moved["a", "a"] == 1.0
    assert moved["c", "c"] == 0.0


def test_asymmetric_matrices_are_refused() -> None:
    """The symmetric eigensolver only takes symmetric input."""
    with pytest.raises(AsymmetricMatrixError):
        eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_pseudo_inverse_of_a_diagonal() -> None:
    """Zero entries stay zero; negative ones are refused."""
    assert_allclose(pinv_diag(np.array([2.0, 0.0])), [0.5, 0.0])
    with pytest.raises(NegativeDiagonalError):
        pinv_diag(np.array([1.0, -1.0]))


def test_spectral_radius_of_a_rotation() -> None:
    """A quarter turn has complex eigenvalues of modulus one."""
    rotation = np.array([[0.0, -1.0], [1.0, 0.0]])
    assert_allclose(spectral_radius(rotation), 1.0)


def test_row_sums_bound_the_spectral_radius() -> None:
    """The largest absolute row sum dominates every eigenvalue."""
    m = np.array([[0.5, -0.25], [-0.25, 1.0]])
    row_sum = 1.25
    assert row_sum_bound(m) == pytest.approx(row_sum)
    assert spectral_radius(m) <= row_sum


def test_monotone_inverse_inverts() -> None:
    """X(I − εX) recovers M from its monotone inverse."""
    eps = 0.5
    m = np.array([[0.2, 0.05], [0.05, 0.1]])
    x = monotone_inverse(m, eps)
    assert_allclose(x @ (np.eye(2) - eps * x), m, atol=1e-12)


def test_inequality_families_hold() -> None:
    """Randomized trials of every matrix inequality find no counterexample."""
    trials = 25
    report = lemma_property_suite(7, trials=trials)
    assert report.passed
    assert all(family.trials == trials for family in report.families)
    assert all(not family.counterexamples for family in report.families)
