import pytest

from trickle.instances import (
    BaseGraph,
    ColoringInstance,
    EmptyLineGraphError,
    EmptyListError,
    ImproperPinningError,
    InsufficientSlackError,
    InvalidBaseGraphError,
    InvalidCliqueCoverError,
    InvalidListError,
    cycle_instance,
    instance_from_base,
    make_instance,
    pin,
    root,
)


def test_triangle_line_graph(triangle: ColoringInstance) -> None:
    """The line graph of a triangle is a triangle covered by three edge cliques."""
    n = 3
    degree = 2
    beta = 5
    assert triangle.n == n
    assert all(triangle.degree(v) == degree for v in range(n))
    assert triangle.max_degree == degree
    assert triangle.beta == beta
    assert sorted(sorted(c) for c in triangle.cliques) == [[0, 1], [0, 2], [1, 2]]
    assert triangle.labels == ("0-1", "0-2", "1-2")
    assert triangle.is_uniform


def test_pendant_vertices_give_singleton_cliques(path: ColoringInstance) -> None:
    """Base vertices of degree one contribute singleton cliques."""
    cliques = [sorted(c) for c in path.cliques]
    assert cliques == [[0], [0, 1], [1, 2], [2]]
    assert path.cliques_of[1] == (1, 2)


def test_cycle_instance_is_a_cycle() -> None:
    """The line graph of C_5 is C_5."""
    length = 5
    q = 8
    degree = 2
    instance = cycle_instance(length, q)
    assert instance.n == length
    assert all(instance.degree(v) == degree for v in range(length))


def test_insufficient_slack_is_rejected() -> None:
    """q = 4 on a triangle leaves β = 1."""
    base = BaseGraph.from_edges([(0, 1), (0, 2), (1, 2)])
    with pytest.raises(InsufficientSlackError):
        instance_from_base(base, 4)
    tight = instance_from_base(base, 4, require_slack=False)
    assert tight.beta == 1
    assert not tight.slack_checked


def test_invalid_base_graphs() -> None:
    """Self-loops, duplicate edges and edgeless graphs are refused."""
    with pytest.raises(InvalidBaseGraphError):
        BaseGraph.from_edges([(1, 1)])
    with pytest.raises(InvalidBaseGraphError):
        BaseGraph.from_edges([(0, 1), (1, 0)])
    with pytest.raises(EmptyLineGraphError):
        instance_from_base(BaseGraph.from_edges([]), 3)


def test_clique_cover_must_hold_cliques() -> None:
    """A cover member that is not a clique is refused."""
    with pytest.raises(InvalidCliqueCoverError):
        make_instance([[1], [0, 2], [1]], {0: [0, 1, 2]}, [[1, 2, 3]] * 3, 3)


def test_lists_are_validated() -> None:
    """Empty lists, a wrong number of lists and colors outside 1..q are refused."""
    with pytest.raises(EmptyListError):
        make_instance([[1], [0]], {0: [0, 1]}, [[], [1, 2]], 2, require_slack=False)
    with pytest.raises(InvalidListError):
        make_instance([[1], [0]], {0: [0, 1]}, [[1, 2]], 2, require_slack=False)
    with pytest.raises(InvalidListError):
        make_instance([[1], [0]], {0: [0, 1]}, [[1, 9], [1, 2]], 2, require_slack=False)


def test_pinning_builds_residual(triangle: ColoringInstance) -> None:
    """Pinning vertex 0 removes its color from both neighbors."""
    pinned = pin(triangle, {0: 1})
    remaining = 7
    codim = 2
    assert pinned.codim == codim
    assert pinned.free == (1, 2)
    assert all(len(pinned.residual_lists[v]) == remaining for v in pinned.free)
    assert 1 not in pinned.residual_lists[1]
    (cls,) = pinned.classes
    assert cls.signature == (1, 2)
    assert cls.size == remaining
    assert cls.rep == min(pinned.residual_lists[1])


def test_improper_pinnings_are_refused(triangle: ColoringInstance) -> None:
    """Adjacent vertices may not share a color and colors must come from the lists."""
    with pytest.raises(ImproperPinningError):
        pin(triangle, {0: 1, 1: 1})
    with pytest.raises(ImproperPinningError):
        pin(triangle, {0: 9})
    with pytest.raises(ImproperPinningError):
        pin(triangle, {0: 1}).extend_many({0: 2})


def test_pinning_commutes() -> None:
    """Pinning τ₁ then τ₂ gives the face of τ₁ ∪ τ₂, in either order."""
    instance = cycle_instance(4, 5)
    first, second = {0: 1}, {2: 3, 3: 2}
    together = pin(instance, first | second)
    stepwise_faces = (
        pin(instance, first).extend_many(second),
        pin(instance, second).extend_many(first),
    )
    for stepwise in stepwise_faces:
        assert stepwise.pin == together.pin
        assert stepwise.key == together.key
        assert dict(stepwise.residual_lists) == dict(together.residual_lists)
        assert stepwise.free == together.free
    one_by_one = pin(instance, first).extend(2, 3).extend(3, 2)
    assert one_by_one.residual_lists == together.residual_lists


def test_colorings_order(free_edge: ColoringInstance) -> None:
    """Colorings come in lexicographic order, or its reverse."""
    residual = root(free_edge).residual
    assert next(residual.colorings()) == {0: 1, 1: 2}
    assert next(residual.colorings(descending=True)) == {0: 3, 1: 2}
    total = 4
    assert len(list(residual.colorings())) == total


def test_face_key_ignores_color_names(triangle: ColoringInstance) -> None:
    """Faces that differ by a relabeling of colors share a key."""
    assert pin(triangle, {0: 1}).key == pin(triangle, {0: 5}).key
    assert pin(triangle, {0: 1}).key != pin(triangle, {1: 1}).key


def test_disconnected_residual(path: ColoringInstance) -> None:
    """Pinning the middle of the path splits the residual graph."""
    pinned = pin(path, {1: 1})
    assert not pinned.is_connected
    assert pinned.components() == [(0,), (2,)]
