from dataclasses import dataclass

from trickle.counting import count_extensions
from trickle.instances import PinnedInstance


@dataclass(frozen=True)
class ChildGroup:
    """Single extensions τ ∪ {vd} with the same color-c block, and their total π_τ mass."""

    child: PinnedInstance
    weight: float
    multiplicity: int


def child_groups(pinned: PinnedInstance, c: int) -> list[ChildGroup]:
    """Group the extensions x ~ π_τ by the block of color `c` they carry.

    Relabeling colors inside a class while fixing `c` maps one extension to
    another, so within a class `c` is split off and the other colors share a
    representative.
    """
    k = pinned.codim
    total = count_extensions(pinned).value
    groups: list[ChildGroup] = []
    for cls in pinned.classes:
        if c in cls.colors:
            others = [d for d in cls.colors if d != c]
            choices = [(c, 1)] + ([(others[0], len(others))] if others else [])
        else:
            choices = [(cls.rep, cls.size)]
        for v in cls.signature:
            for d, multiplicity in choices:
                child = pinned.extend(v, d)
                count = count_extensions(child).value
                if count:
                    weight = multiplicity * count / (total * k)
                    groups.append(ChildGroup(child, weight, multiplicity))
    return groups
