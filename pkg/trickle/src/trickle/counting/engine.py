from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from math import prod

import networkx as nx

from trickle.errors import CapExceededError
from trickle.instances import PinnedInstance, Residual
from trickle.instances.pinning import ResidualKey
from trickle.logger import get_logger
from trickle.misc import Memo
from trickle.settings import get_settings

logger = get_logger(__name__)


class Backend(StrEnum):
    """Counting backend."""

    AUTO = "auto"
    ENUMERATE = "enumerate"
    SYMMETRY = "symmetry"


@dataclass(frozen=True)
class ExtensionCount:
    """Exact number of proper colorings extending a pinning.

    `backends` holds the backend that counted each connected component of the
    residual, in component order; it is empty when no component was counted.
    """

    value: int
    backends: tuple[Backend, ...]

    @property
    def backend(self) -> Backend:
        """The backend shared by every component; AUTO when they differ or none ran."""
        used = set(self.backends)
        return used.pop() if len(used) == 1 else Backend.AUTO

    def __int__(self) -> int:
        """The count as a Python integer."""
        return self.value


_counts: Memo[tuple[ResidualKey, Backend], int] = Memo("extension counts")


def clear_cache() -> None:
    """Forget every memoized count."""
    _counts.clear()


def _bfs_order(residual: Residual) -> tuple[int, ...]:
    start = residual.vertices[0]
    order = [start, *(v for _, v in nx.bfs_edges(residual.graph, start))]
    return tuple(order)


def _enumerate(residual: Residual) -> int:
    order = _bfs_order(residual)
    colors: dict[int, int] = {}

    def count(i: int) -> int:
        if i == len(order):
            return 1
        v = order[i]
        taken = {colors[u] for u in residual.neighbors[v] if u in colors}
        total = 0
        for c in residual.lists[v]:
            if c in taken:
                continue
            colors[v] = c
            total += count(i + 1)
            del colors[v]
        return total

    return count(0)


def _symmetric(residual: Residual) -> int:
    """Count by assigning (class, slot) pairs instead of colors.

    A vertex takes either a slot already opened in one of its classes or a new
    slot; a new slot in a class of multiplicity m with o slots open stands for
    the m − o colors not yet used.
    """
    order = _bfs_order(residual)
    classes = residual.classes
    options = {v: [j for j, k in enumerate(classes) if v in k.signature] for v in order}
    opened = [0] * len(classes)
    slot: dict[int, tuple[int, int]] = {}

    def count(i: int) -> int:
        if i == len(order):
            return 1
        v = order[i]
        total = 0
        for j in options[v]:
            used = {slot[u][1] for u in residual.neighbors[v] if u in slot and slot[u][0] == j}
            for s in range(opened[j]):
                if s in used:
                    continue
                slot[v] = (j, s)
                total += count(i + 1)
            fresh = classes[j].size - opened[j]
            if fresh > 0:
                slot[v] = (j, opened[j])
                opened[j] += 1
                total += fresh * count(i + 1)
                opened[j] -= 1
            slot.pop(v, None)
        return total

    return count(0)


def _count_component(residual: Residual, backend: Backend, cap_enum: int) -> tuple[int, Backend]:
    if backend is Backend.AUTO:
        backend = Backend.ENUMERATE if residual.search_space <= cap_enum else Backend.SYMMETRY
    if backend is Backend.ENUMERATE and residual.search_space > cap_enum:
        raise CapExceededError("enumeration search space", residual.search_space, cap_enum)
    compute = _enumerate if backend is Backend.ENUMERATE else _symmetric
    return _counts.get_or_compute((residual.key, backend), lambda: compute(residual)), backend


def _count_parts(
    residual: Residual, backend: Backend, cap_enum: int | None
) -> tuple[int, tuple[Backend, ...]]:
    if not residual.vertices:
        return 1, ()
    if residual.has_empty_list():
        return 0, ()
    cap = cap_enum if cap_enum is not None else get_settings().cap_enum
    parts = [_count_component(part, backend, cap) for part in residual.components()]
    return prod(value for value, _ in parts), tuple(used for _, used in parts)


def count_residual(
    residual: Residual, *, backend: Backend = Backend.AUTO, cap_enum: int | None = None
) -> int:
    """Count proper colorings of a residual instance, component by component."""
    return _count_parts(residual, backend, cap_enum)[0]


def count_extensions(
    pinned: PinnedInstance, *, backend: Backend = Backend.AUTO, cap_enum: int | None = None
) -> ExtensionCount:
    """Exact number of proper colorings of the residual instance of `pinned`.

    The direct enumeration runs while the product of residual list sizes of a
    component stays below `cap_enum`; larger components go through the
    color-class backend. An empty residual list gives 0.
    """
    value, backends = _count_parts(pinned.residual, backend, cap_enum)
    return ExtensionCount(value=value, backends=backends)


def completions(pinned: PinnedInstance, *, cap_enum: int | None = None) -> Iterator[dict[int, int]]:
    """Enumerate the proper completions ω of `pinned` on its free vertices."""
    cap = cap_enum if cap_enum is not None else get_settings().cap_enum
    if pinned.residual.search_space > cap:
        raise CapExceededError("completion enumeration", pinned.residual.search_space, cap)
    return pinned.residual.colorings()
