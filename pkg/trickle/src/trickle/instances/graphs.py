from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import EmptyLineGraphError, InvalidBaseGraphError

type Edge = tuple[int, int]


@dataclass(frozen=True)
class BaseGraph:
    """A simple graph whose edges become the vertices of a line graph."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        """Normalize edges to sorted pairs and validate them."""
        normalized = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        for a, b in normalized:
            if a == b:
                msg = f"self-loop at base vertex {a}"
                raise InvalidBaseGraphError(msg)
            if a < 0 or b >= self.vertex_count:
                msg = f"edge ({a}, {b}) out of range for {self.vertex_count} vertices"
                raise InvalidBaseGraphError(msg)
        if len(set(normalized)) != len(normalized):
            msg = "duplicate edges; multigraphs are not supported"
            raise InvalidBaseGraphError(msg)
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def from_edges(cls, edges: list[tuple[int, int]] | tuple[Edge, ...]) -> "BaseGraph":
        """Build a base graph whose vertex set is 0..max endpoint."""
        vertex_count = max((max(e) for e in edges), default=-1) + 1
        return cls(vertex_count=vertex_count, edges=tuple((int(a), int(b)) for a, b in edges))

    @cached_property
    def graph(self) -> nx.Graph:
        """The base graph as a networkx graph."""
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @property
    def max_degree(self) -> int:
        """Maximum vertex degree of the base graph."""
        return max((d for _, d in self.graph.degree), default=0)


@dataclass(frozen=True)
class LineGraph:
    """Line graph with vertices indexed by sorted base edges and one clique per base vertex."""

    graph: nx.Graph
    clique_cover: dict[int, frozenset[int]]
    labels: tuple[str, ...]


def line_graph(base: BaseGraph) -> LineGraph:
    """Derive the line graph of `base` together with its natural clique cover.

    Vertex `j` of the result is the `j`-th base edge in sorted order. Base vertex
    `i` contributes the clique of edges incident to it; pendant base vertices
    contribute singletons.
    """
    if not base.edges:
        msg = "empty line graph"
        raise EmptyLineGraphError(msg)
    index = {edge: j for j, edge in enumerate(base.edges)}
    derived = nx.line_graph(base.graph)
    relabeled = nx.relabel_nodes(derived, lambda e: index[(min(e), max(e))])
    graph = nx.Graph()
    graph.add_nodes_from(range(len(base.edges)))
    graph.add_edges_from(relabeled.edges)
    clique_cover = {
        i: frozenset(index[(min(i, j), max(i, j))] for j in base.graph.neighbors(i))
        for i in range(base.vertex_count)
        if base.graph.degree[i] > 0
    }
    labels = tuple(f"{a}-{b}" for a, b in base.edges)
    return LineGraph(graph=graph, clique_cover=clique_cover, labels=labels)
