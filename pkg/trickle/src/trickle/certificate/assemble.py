from collections.abc import Hashable
from dataclasses import dataclass

import numpy as np

from trickle.counting import marginals
from trickle.instances import PinnedInstance
from trickle.logger import get_logger
from trickle.misc import Memo
from trickle.specmat import Array

from .a_matrix import a_matrix
from .b_matrix import b_value
from .base_case import BASE_CODIM, base_case_matrix
from .blocks import CertificateKind, CertificateMatrices, ColorBlock
from .errors import CertificateError
from .schedule import CertificateSchedule

logger = get_logger(__name__)


@dataclass(frozen=True)
class _StoredBlock:
    vertices: tuple[int, ...]
    pi: Array
    matrix: Array
    a: Array | None
    b: Array | None


@dataclass(frozen=True)
class _Stored:
    kind: CertificateKind
    blocks: dict[tuple[int, ...], _StoredBlock]


# Keyed by canonical face: blocks are stored by class signature and get their colors back
# from whichever face asks.
_certificates: Memo[tuple[Hashable, CertificateSchedule], _Stored] = Memo("certificates")


def clear_cache() -> None:
    """Forget every memoized certificate."""
    _certificates.clear()


def _store(matrices: CertificateMatrices) -> _Stored:
    classes = {cls.rep: cls for cls in matrices.pinned.classes}
    return _Stored(
        kind=matrices.kind,
        blocks={
            classes[block.colors[0]].signature: _StoredBlock(
                block.vertices, block.pi, block.matrix, block.a, block.b
            )
            for block in matrices.blocks
        },
    )


def _restore(pinned: PinnedInstance, stored: _Stored) -> CertificateMatrices:
    blocks = tuple(
        ColorBlock(cls.colors, s.vertices, s.pi, s.matrix, s.a, s.b)
        for cls in pinned.classes
        if (s := stored.blocks.get(cls.signature)) is not None
    )
    return CertificateMatrices(pinned, stored.kind, blocks)


def _embed(
    target: Array, position: dict[int, int], vertices: tuple[int, ...], data: Array
) -> None:
    rows = np.array([position[v] for v in vertices])
    target[np.ix_(rows, rows)] += data


def _inductive(pinned: PinnedInstance, schedule: CertificateSchedule) -> CertificateMatrices:
    k = pinned.codim
    probabilities = marginals(pinned)
    cliques = [i for i, members in enumerate(pinned.residual_cliques) if len(members) > 1]
    blocks = []
    for cls in pinned.classes:
        c = cls.rep
        vertices = cls.signature
        position = {v: j for j, v in enumerate(vertices)}
        pi = np.array([probabilities[(v, c)] / k for v in vertices])
        a = np.zeros((len(vertices), len(vertices)))
        for i in cliques:
            block = a_matrix(pinned, i, c, schedule)
            _embed(a, position, tuple(v for v, _ in block.index), block.data)
        b = np.array([b_value(pinned, v, schedule) for v in vertices])
        matrix = (a + np.diag(pi * b)) / (k - 1)
        blocks.append(ColorBlock(cls.colors, vertices, pi, matrix, a, b))
    return CertificateMatrices(pinned, CertificateKind.INDUCTIVE, tuple(blocks))


def component_faces(
    pinned: PinnedInstance, *, descending: bool = False
) -> list[tuple[float, PinnedInstance]]:
    """Faces τ ∪ η_i with weights n_i(n_i − 1)/(k(k − 1)), one per component of size ≥ 2.

    η is the lexicographically least completion (greatest with `descending`)
    and η_i is η off component i.
    """
    k = pinned.codim
    parts = pinned.residual.components()
    eta: dict[int, int] = {}
    for part in parts:
        first = next(part.colorings(descending=descending), None)
        if first is None:
            msg = f"face {pinned.describe()} has no completion"
            raise CertificateError(msg)
        eta.update(first)
    faces = []
    for part in parts:
        size = len(part.vertices)
        if size < BASE_CODIM:
            continue
        inside = frozenset(part.vertices)
        child = pinned.extend_many({v: c for v, c in eta.items() if v not in inside})
        faces.append((size * (size - 1) / (k * (k - 1)), child))
    return faces


def product_assembly(
    pinned: PinnedInstance, schedule: CertificateSchedule, *, descending: bool = False
) -> CertificateMatrices:
    """M_τ = Σ_i n_i(n_i − 1)/(k(k − 1))·M_{τ∪η_i} over the components of G_τ.

    Components with fewer than two vertices contribute nothing.
    """
    k = pinned.codim
    children = [
        (weight, certificate_matrix(child, schedule))
        for weight, child in component_faces(pinned, descending=descending)
    ]
    probabilities = marginals(pinned)
    blocks = []
    for cls in pinned.classes:
        c = cls.rep
        vertices = cls.signature
        position = {v: j for j, v in enumerate(vertices)}
        matrix = np.zeros((len(vertices), len(vertices)))
        for weight, child in children:
            block = child.block_for(c)
            if block is not None:
                _embed(matrix, position, block.vertices, weight * block.matrix)
        if not np.any(matrix):
            continue
        pi = np.array([probabilities[(v, c)] / k for v in vertices])
        blocks.append(ColorBlock(cls.colors, vertices, pi, matrix))
    return CertificateMatrices(pinned, CertificateKind.PRODUCT, tuple(blocks))


def _build(pinned: PinnedInstance, schedule: CertificateSchedule) -> CertificateMatrices:
    if pinned.codim == BASE_CODIM:
        return base_case_matrix(pinned, beta=schedule.beta)
    if pinned.is_connected:
        return _inductive(pinned, schedule)
    return product_assembly(pinned, schedule)


def certificate_matrix(
    pinned: PinnedInstance, schedule: CertificateSchedule
) -> CertificateMatrices:
    """M_τ with its constituents.

    Codim 2 is the base case. Above it, a connected G_τ gives the blocks
    N_τ^c = (Σ_i A_τ^{i,c} + Π_τ^cB_τ^c)/(k − 1) and a disconnected one is
    assembled from its components.
    """
    if pinned.codim < BASE_CODIM:
        msg = f"certificate needs codim ≥ 2, got {pinned.codim}"
        raise CertificateError(msg)

    def compute() -> _Stored:
        matrices = _build(pinned, schedule)
        logger.debug(
            "Built certificate",
            extra={
                "face": pinned.describe(),
                "kind": str(matrices.kind),
                "blocks": len(matrices.blocks),
            },
        )
        return _store(matrices)

    return _restore(pinned, _certificates.get_or_compute((pinned.key, schedule), compute))
