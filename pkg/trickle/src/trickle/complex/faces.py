from collections.abc import Hashable, Iterator
from dataclasses import dataclass

from trickle.counting import count_extensions
from trickle.errors import CapExceededError
from trickle.instances import ColoringInstance, PinnedInstance, root
from trickle.logger import get_logger
from trickle.settings import get_settings

from .errors import ComplexError

logger = get_logger(__name__)


@dataclass(frozen=True)
class FaceClass:
    """Faces sharing a free vertex set and a residual instance up to color relabeling."""

    rep: PinnedInstance
    size: int

    @property
    def codim(self) -> int:
        """Codimension of every face in the class."""
        return self.rep.codim


def _children(level: list[FaceClass], pinned_count: int) -> list[FaceClass]:
    reps: dict[Hashable, PinnedInstance] = {}
    weight: dict[Hashable, int] = {}
    for face in level:
        for cls in face.rep.classes:
            for v in cls.signature:
                child = face.rep.extend(v, cls.rep)
                if child.key not in reps:
                    if count_extensions(child).value == 0:
                        continue
                    reps[child.key] = child
                    weight[child.key] = 0
                weight[child.key] += face.size * cls.size
    # each child face is reached once through each of its pinned vertices
    return [FaceClass(rep, weight[key] // pinned_count) for key, rep in reps.items()]


def iter_face_levels(
    instance: ColoringInstance, *, cap: int | None = None
) -> Iterator[list[FaceClass]]:
    """Yield the face classes level by level, from the empty face down to codim 0."""
    cap = cap if cap is not None else get_settings().cap_enum
    start = root(instance)
    if count_extensions(start).value == 0:
        msg = "instance has no proper coloring"
        raise ComplexError(msg)
    level = [FaceClass(start, 1)]
    yield level
    for pinned_count in range(1, instance.n + 1):
        level = _children(level, pinned_count)
        if len(level) > cap:
            raise CapExceededError("face classes", len(level), cap)
        logger.debug(
            "Enumerated face level",
            extra={"codim": instance.n - pinned_count, "classes": len(level)},
        )
        yield level


def enumerate_faces(
    instance: ColoringInstance, codim: int, *, cap: int | None = None
) -> list[FaceClass]:
    """One representative per class of codim-`codim` faces, with class sizes.

    Only faces with at least one completion are listed; the sizes add up to
    |𝓒_{n−codim}|.
    """
    if not 0 <= codim <= instance.n:
        msg = f"codim {codim} out of range 0..{instance.n}"
        raise ComplexError(msg)
    for level in iter_face_levels(instance, cap=cap):
        if level[0].codim == codim:
            return level
    msg = f"no faces of codim {codim}"
    raise ComplexError(msg)
