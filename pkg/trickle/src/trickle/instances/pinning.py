from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property, reduce
from operator import mul

import networkx as nx

from .coloring import ColoringInstance
from .errors import ImproperPinningError

type Element = tuple[int, int]
type ClassKey = tuple[tuple[tuple[int, ...], int], ...]
type ResidualKey = tuple[tuple[int, ...], tuple[tuple[int, int], ...], ClassKey]


@dataclass(frozen=True)
class ColorClass:
    """Colors sharing a signature: the set of free vertices whose lists hold them.

    Colors of one class are interchangeable in the residual instance.
    """

    signature: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def size(self) -> int:
        """Multiplicity of the class."""
        return len(self.colors)

    @property
    def rep(self) -> int:
        """Smallest color of the class."""
        return self.colors[0]


@dataclass(frozen=True, eq=False)
class Residual:
    """The list-coloring instance left on the free vertices."""

    vertices: tuple[int, ...]
    neighbors: Mapping[int, frozenset[int]]
    lists: Mapping[int, frozenset[int]]

    @cached_property
    def graph(self) -> nx.Graph:
        """Residual graph."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted edges among the free vertices."""
        return tuple(sorted((u, v) for u in self.vertices for v in self.neighbors[u] if u < v))

    @cached_property
    def classes(self) -> tuple[ColorClass, ...]:
        """Color classes with nonempty signature, ordered by signature then smallest color."""
        signature: dict[int, list[int]] = defaultdict(list)
        for v in self.vertices:
            for c in self.lists[v]:
                signature[c].append(v)
        grouped: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for c, vs in signature.items():
            grouped[tuple(sorted(vs))].append(c)
        classes = (ColorClass(sig, tuple(sorted(cs))) for sig, cs in grouped.items())
        return tuple(sorted(classes, key=lambda k: (k.signature, k.rep)))

    @cached_property
    def key(self) -> ResidualKey:
        """Canonical form, equal for residuals identical up to color relabeling."""
        class_key = tuple(sorted((k.signature, k.size) for k in self.classes))
        return (self.vertices, self.edges, class_key)

    def class_of(self, c: int) -> ColorClass | None:
        """Class holding color `c`, or None when no free vertex can take it."""
        for k in self.classes:
            if c in k.colors:
                return k
        return None

    def shared(self, u: int, v: int) -> int:
        """Size ℓ_uv of the common residual list."""
        return len(self.lists[u] & self.lists[v])

    def degree(self, v: int) -> int:
        """Number of free neighbors of `v`."""
        return len(self.neighbors[v])

    @property
    def search_space(self) -> int:
        """Product of residual list sizes."""
        return reduce(mul, (len(self.lists[v]) for v in self.vertices), 1)

    def has_empty_list(self) -> bool:
        """Whether some free vertex has no color left."""
        return any(not self.lists[v] for v in self.vertices)

    def components(self) -> list["Residual"]:
        """Connected components, in order of smallest vertex."""
        parts = sorted(sorted(c) for c in nx.connected_components(self.graph))
        return [self.restrict(part) for part in parts]

    def restrict(self, vertices: Iterable[int]) -> "Residual":
        """Sub-residual induced on `vertices`."""
        keep = tuple(sorted(vertices))
        kept = frozenset(keep)
        return Residual(
            vertices=keep,
            neighbors={v: self.neighbors[v] & kept for v in keep},
            lists={v: self.lists[v] for v in keep},
        )

    def assign(self, v: int, c: int) -> "Residual":
        """Color `v` with `c`: drop `v` and remove `c` from its free neighbors."""
        keep = tuple(u for u in self.vertices if u != v)
        kept = frozenset(keep)
        lists = {
            u: self.lists[u] - {c} if u in self.neighbors[v] else self.lists[u] for u in keep
        }
        return Residual(keep, {u: self.neighbors[u] & kept for u in keep}, lists)

    def drop_color(self, vertices: Iterable[int], c: int) -> "Residual":
        """Remove `c` from the lists of `vertices`."""
        targets = frozenset(vertices)
        lists = {u: self.lists[u] - {c} if u in targets else self.lists[u] for u in self.vertices}
        return Residual(self.vertices, self.neighbors, lists)

    def remove(self, vertices: Iterable[int]) -> "Residual":
        """Delete `vertices` without touching any list."""
        gone = frozenset(vertices)
        return self.restrict(v for v in self.vertices if v not in gone)

    def colorings(self, *, descending: bool = False) -> Iterator[dict[int, int]]:
        """Enumerate proper colorings in lexicographic order of (vertex, color), or its reverse."""
        order = self.vertices
        current: dict[int, int] = {}

        def extend(i: int) -> Iterator[dict[int, int]]:
            if i == len(order):
                yield dict(current)
                return
            v = order[i]
            taken = {current[u] for u in self.neighbors[v] if u in current}
            for c in sorted(self.lists[v] - taken, reverse=descending):
                current[v] = c
                yield from extend(i + 1)
                del current[v]

        return extend(0)


@dataclass(frozen=True)
class PartialColoring:
    """A partial coloring τ of an `n`-vertex instance, stored as sorted pairs."""

    assignment: tuple[Element, ...]
    n: int

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], n: int) -> "PartialColoring":
        """Build from a vertex -> color mapping."""
        return cls(tuple(sorted((int(v), int(c)) for v, c in mapping.items())), n)

    @classmethod
    def empty(cls, n: int) -> "PartialColoring":
        """The empty pinning."""
        return cls((), n)

    @property
    def codim(self) -> int:
        """Number of unpinned vertices."""
        return self.n - len(self.assignment)

    @property
    def domain(self) -> frozenset[int]:
        """Pinned vertices."""
        return frozenset(v for v, _ in self.assignment)

    def as_dict(self) -> dict[int, int]:
        """Vertex -> color mapping."""
        return dict(self.assignment)

    def union(self, other: Mapping[int, int]) -> "PartialColoring":
        """Union with `other`; a vertex pinned twice to different colors is improper."""
        merged = self.as_dict()
        for v, c in other.items():
            if merged.get(v, c) != c:
                msg = f"vertex {v} pinned to both {merged[v]} and {c}"
                raise ImproperPinningError(msg)
            merged[v] = c
        return PartialColoring.from_mapping(merged, self.n)

    def __str__(self) -> str:
        """Compact `{v:c,...}` form."""
        return "{" + ",".join(f"{v}:{c}" for v, c in self.assignment) + "}"


@dataclass(frozen=True)
class PinnedInstance:
    """An instance together with a proper pinning τ and the derived residual data."""

    parent: ColoringInstance
    pin: PartialColoring

    @cached_property
    def residual(self) -> Residual:
        """Residual instance on the free vertices."""
        assigned = self.pin.as_dict()
        free = tuple(v for v in range(self.parent.n) if v not in assigned)
        kept = frozenset(free)
        lists = {
            v: self.parent.lists[v]
            - {assigned[u] for u in self.parent.adjacency[v] if u in assigned}
            for v in free
        }
        neighbors = {v: self.parent.adjacency[v] & kept for v in free}
        return Residual(free, neighbors, lists)

    @property
    def free(self) -> tuple[int, ...]:
        """Free vertices V_τ in increasing order."""
        return self.residual.vertices

    @property
    def codim(self) -> int:
        """Codimension k of the face."""
        return self.pin.codim

    @property
    def residual_lists(self) -> Mapping[int, frozenset[int]]:
        """Residual lists L_v^τ."""
        return self.residual.lists

    def residual_degree(self, v: int) -> int:
        """Number Δ_τ(v) of free neighbors."""
        return self.residual.degree(v)

    @cached_property
    def residual_cliques(self) -> tuple[frozenset[int], ...]:
        """Free members V_τ^i of each clique, by clique position."""
        kept = frozenset(self.free)
        return tuple(members & kept for members in self.parent.cliques)

    def clique_color_members(self, i: int, c: int) -> tuple[int, ...]:
        """Members V_τ^{i,c} of clique `i` whose residual list holds `c`."""
        return tuple(sorted(v for v in self.residual_cliques[i] if c in self.residual.lists[v]))

    def clique_h(self, i: int) -> int:
        """Free clique size minus one, floored at zero."""
        return max(len(self.residual_cliques[i]) - 1, 0)

    def clique_color_h(self, i: int, c: int) -> int:
        """h_τ^{i,c} = |V_τ^{i,c}| − 1, floored at zero."""
        return max(len(self.clique_color_members(i, c)) - 1, 0)

    @property
    def classes(self) -> tuple[ColorClass, ...]:
        """Color classes of the residual instance."""
        return self.residual.classes

    @cached_property
    def key(self) -> tuple[ResidualKey, tuple[tuple[int, ...], ...]]:
        """Canonical face key: residual key plus the clique structure on the free vertices."""
        cliques = tuple(sorted(tuple(sorted(m)) for m in self.residual_cliques if len(m) > 1))
        return (self.residual.key, cliques)

    @cached_property
    def is_connected(self) -> bool:
        """Whether G_τ is connected (an empty residual counts as connected)."""
        return not self.free or nx.is_connected(self.residual.graph)

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components of G_τ."""
        return [r.vertices for r in self.residual.components()]

    def extend(self, v: int, c: int) -> "PinnedInstance":
        """The face τ ∪ {vc}."""
        return self.extend_many({v: c})

    def extend_many(self, omega: Mapping[int, int]) -> "PinnedInstance":
        """The face τ ∪ ω for a partial coloring ω of free vertices."""
        return pin(self.parent, self.pin.union(omega))

    def elements(self) -> Iterator[Element]:
        """Single-element extensions (v, c) with c in L_v^τ."""
        for v in self.free:
            for c in sorted(self.residual.lists[v]):
                yield (v, c)

    def describe(self) -> str:
        """Canonical human-readable face form."""
        return f"codim={self.codim} free={list(self.free)} pin={self.pin}"


def pin(instance: ColoringInstance, tau: PartialColoring | Mapping[int, int]) -> PinnedInstance:
    """Pin `tau` on `instance` after checking it is proper and respects the lists."""
    if not isinstance(tau, PartialColoring):
        tau = PartialColoring.from_mapping(tau, instance.n)
    assigned = tau.as_dict()
    for v, c in assigned.items():
        if not 0 <= v < instance.n:
            msg = f"improper pinning: vertex {v} out of range"
            raise ImproperPinningError(msg)
        if c not in instance.lists[v]:
            msg = f"improper pinning: color {c} not in the list of vertex {v}"
            raise ImproperPinningError(msg)
        for u in instance.adjacency[v]:
            if assigned.get(u) == c:
                msg = f"improper pinning: adjacent vertices {u} and {v} share color {c}"
                raise ImproperPinningError(msg)
    return PinnedInstance(parent=instance, pin=tau)


def root(instance: ColoringInstance) -> PinnedInstance:
    """The empty face."""
    return PinnedInstance(parent=instance, pin=PartialColoring.empty(instance.n))
