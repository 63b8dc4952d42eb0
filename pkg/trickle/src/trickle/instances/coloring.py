from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from trickle.logger import get_logger

from .errors import (
    EmptyListError,
    InsufficientSlackError,
    InvalidCliqueCoverError,
    InvalidListError,
)
from .graphs import BaseGraph, line_graph

logger = get_logger(__name__)

MIN_BETA = 2


@dataclass(frozen=True)
class ColoringInstance:
    """A list-coloring instance on a line graph.

    Vertices are `0..n-1`, colors are integers in `1..q`. `cliques[i]` is the
    clique of line-graph vertices sharing base vertex `clique_ids[i]`.
    """

    adjacency: tuple[frozenset[int], ...]
    lists: tuple[frozenset[int], ...]
    q: int
    cliques: tuple[frozenset[int], ...]
    clique_ids: tuple[int, ...]
    beta: int
    labels: tuple[str, ...]
    line_graph_certified: bool = True
    slack_checked: bool = field(default=True, compare=False)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        """Degree of `v`."""
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        """Maximum degree Δ of the line graph."""
        return max((len(a) for a in self.adjacency), default=0)

    @cached_property
    def graph(self) -> nx.Graph:
        """The line graph as a networkx graph."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)
        return g

    @cached_property
    def cliques_of(self) -> tuple[tuple[int, ...], ...]:
        """Clique positions containing each vertex (one or two of them)."""
        return tuple(
            tuple(i for i, members in enumerate(self.cliques) if v in members)
            for v in range(self.n)
        )

    @property
    def is_uniform(self) -> bool:
        """Whether every list is the full color universe."""
        full = frozenset(range(1, self.q + 1))
        return all(lst == full for lst in self.lists)


def uniform_lists(n: int, q: int) -> tuple[frozenset[int], ...]:
    """Lists `{1..q}` for each of `n` vertices."""
    full = frozenset(range(1, q + 1))
    return tuple(full for _ in range(n))


def _validate_cover(
    adjacency: tuple[frozenset[int], ...], cliques: tuple[frozenset[int], ...]
) -> None:
    n = len(adjacency)
    membership = [0] * n
    for members in cliques:
        for v in members:
            if not 0 <= v < n:
                msg = f"clique member {v} out of range"
                raise InvalidCliqueCoverError(msg)
            membership[v] += 1
            if any(u != v and u not in adjacency[v] for u in members):
                msg = f"clique {sorted(members)} is not a clique"
                raise InvalidCliqueCoverError(msg)
    for v, count in enumerate(membership):
        if count not in (1, 2):
            msg = f"vertex {v} lies in {count} cliques; a line graph needs one or two"
            raise InvalidCliqueCoverError(msg)
    for u in range(n):
        for v in adjacency[u]:
            if not any(u in m and v in m for m in cliques):
                msg = f"edge ({u}, {v}) is not covered by any clique"
                raise InvalidCliqueCoverError(msg)


def make_instance(
    graph: nx.Graph | Sequence[Iterable[int]],
    clique_cover: Mapping[int, Iterable[int]],
    lists: Sequence[Iterable[int]],
    q: int,
    *,
    labels: Sequence[str] | None = None,
    line_graph_certified: bool = True,
    require_slack: bool = True,
) -> ColoringInstance:
    """Attach color lists to a line graph and compute its slack β.

    Args:
        graph (nx.Graph | Sequence[Iterable[int]]): graph on `0..n-1`, or its adjacency lists.
        clique_cover (Mapping[int, Iterable[int]]): clique id -> members.
        lists (Sequence[Iterable[int]]): color list of each vertex, within `1..q`.
        q (int): size of the color universe.
        labels (Sequence[str] | None, optional): vertex labels for reports.
        line_graph_certified (bool, optional): False when the graph is only asserted
            to be a line graph; certificate guarantees are then unsupported.
        require_slack (bool, optional): reject instances with β < 2. Counting and
            dynamics experiments on tight lists pass False.

    Returns:
        ColoringInstance: the validated instance.

    """
    if isinstance(graph, nx.Graph):
        n = graph.number_of_nodes()
        adjacency = tuple(frozenset(int(u) for u in graph.neighbors(v)) for v in range(n))
    else:
        adjacency = tuple(frozenset(int(u) for u in nbrs) for nbrs in graph)
        n = len(adjacency)
        for v, nbrs in enumerate(adjacency):
            if v in nbrs or any(v not in adjacency[u] for u in nbrs):
                msg = f"adjacency of vertex {v} is not symmetric and loop-free"
                raise InvalidCliqueCoverError(msg)

    frozen_lists = tuple(frozenset(int(c) for c in lst) for lst in lists)
    if len(frozen_lists) != n:
        msg = f"expected {n} lists, got {len(frozen_lists)}"
        raise InvalidListError(msg)
    for v, lst in enumerate(frozen_lists):
        if not lst:
            msg = f"vertex {v} has an empty list"
            raise EmptyListError(msg)
        if min(lst) < 1 or max(lst) > q:
            msg = f"list of vertex {v} leaves the color universe 1..{q}"
            raise InvalidListError(msg)

    ids = tuple(sorted(clique_cover))
    cliques = tuple(frozenset(int(v) for v in clique_cover[i]) for i in ids)
    _validate_cover(adjacency, cliques)

    beta = min(len(frozen_lists[v]) - len(adjacency[v]) for v in range(n)) - 1
    if require_slack and beta < MIN_BETA:
        msg = f"insufficient slack: beta={beta} < {MIN_BETA}"
        raise InsufficientSlackError(msg)

    instance = ColoringInstance(
        adjacency=adjacency,
        lists=frozen_lists,
        q=q,
        cliques=cliques,
        clique_ids=ids,
        beta=beta,
        labels=tuple(labels) if labels is not None else tuple(str(v) for v in range(n)),
        line_graph_certified=line_graph_certified,
        slack_checked=require_slack,
    )
    logger.debug(
        "Built coloring instance",
        extra={"n": n, "q": q, "max_degree": instance.max_degree, "beta": beta},
    )
    return instance


def instance_from_base(
    base: BaseGraph,
    q: int,
    lists: Sequence[Iterable[int]] | None = None,
    *,
    require_slack: bool = True,
) -> ColoringInstance:
    """Build the list-coloring instance on the line graph of `base`.

    Lists default to the uniform `{1..q}` for every line-graph vertex.
    """
    derived = line_graph(base)
    n = derived.graph.number_of_nodes()
    return make_instance(
        derived.graph,
        derived.clique_cover,
        lists if lists is not None else uniform_lists(n, q),
        q,
        labels=derived.labels,
        require_slack=require_slack,
    )


def cycle_instance(length: int, q: int, *, require_slack: bool = True) -> ColoringInstance:
    """Uniform-list instance on the line graph of the cycle C_length, itself a cycle."""
    edges = tuple((i, (i + 1) % length) for i in range(length))
    return instance_from_base(BaseGraph.from_edges(edges), q, require_slack=require_slack)
