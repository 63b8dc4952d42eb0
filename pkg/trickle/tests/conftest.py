from collections.abc import Iterator

import pytest

from trickle.certificate import CertificateSchedule, build_schedule
from trickle.certificate import clear_cache as clear_certificates
from trickle.counting import clear_cache as clear_counts
from trickle.instances import (
    BaseGraph,
    ColoringInstance,
    instance_from_base,
    make_instance,
    uniform_lists,
)
from trickle.settings import override_settings


@pytest.fixture(autouse=True)
def _fresh_state() -> Iterator[None]:
    """Every test starts from empty memos and environment settings."""
    clear_counts()
    clear_certificates()
    override_settings()
    yield
    override_settings()


@pytest.fixture
def triangle() -> ColoringInstance:
    """Line graph of the triangle (itself a triangle) with uniform lists of size 8."""
    return instance_from_base(BaseGraph.from_edges([(0, 1), (0, 2), (1, 2)]), 8)


@pytest.fixture
def small_triangle() -> ColoringInstance:
    """The triangle at q = 5, the smallest q with slack 2."""
    return instance_from_base(BaseGraph.from_edges([(0, 1), (0, 2), (1, 2)]), 5)


@pytest.fixture
def path() -> ColoringInstance:
    """Line graph u–v–w of the base path on four vertices, q = 6."""
    return instance_from_base(BaseGraph.from_edges([(0, 1), (1, 2), (2, 3)]), 6)


@pytest.fixture
def free_edge() -> ColoringInstance:
    """An edge with lists {1, 2, 3} and {1, 2}."""
    return make_instance([[1], [0]], {0: [0, 1]}, [[1, 2, 3], [1, 2]], 3, require_slack=False)


@pytest.fixture
def uniform_edge() -> ColoringInstance:
    """An edge with uniform lists of size 12."""
    q = 12
    return make_instance([[1], [0]], {0: [0, 1]}, uniform_lists(2, q), q)


@pytest.fixture
def schedule() -> CertificateSchedule:
    """A schedule at Δ = 2 and the smallest allowed slack."""
    return build_schedule(2, 21)
