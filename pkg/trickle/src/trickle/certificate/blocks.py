"""Per-color block storage of the certificate matrices.

M_τ is block diagonal over colors, and colors of one class carry identical
blocks, so one block per color class holds all of M_τ.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import numpy as np

from trickle.counting import marginals
from trickle.instances import Element, PinnedInstance
from trickle.schemas import LoewnerReport
from trickle.specmat import Array, LabeledMatrix, loewner_leq, max_eigenvalue, pinv_sqrt


class CertificateKind(StrEnum):
    """How M_τ was obtained."""

    BASE = "base"
    INDUCTIVE = "inductive"
    PRODUCT = "product"


@dataclass(frozen=True, eq=False)
class ColorBlock:
    """The block N_τ^c shared by every color c of one class.

    Rows are (v, c) for v in `vertices`; `pi` holds π_τ(vc). `a` and `b` are
    A_τ^c and the diagonal of B_τ^c, absent for product-assembled faces.
    """

    colors: tuple[int, ...]
    vertices: tuple[int, ...]
    pi: Array
    matrix: Array
    a: Array | None = None
    b: Array | None = None

    def index(self, c: int) -> tuple[Element, ...]:
        """Row labels of the block of color `c`."""
        return tuple((v, c) for v in self.vertices)

    def labeled(self, c: int) -> LabeledMatrix:
        """N_τ^c as a labeled matrix."""
        return LabeledMatrix(self.index(c), self.matrix)

    @property
    def stationary(self) -> Array:
        """Π_τ^c."""
        return np.diag(self.pi)

    @property
    def normalized(self) -> Array:
        """Π^{-1/2}N^cΠ^{-1/2}; its spectrum is that of Π^{-1}N^c."""
        half = pinv_sqrt(self.pi)
        return half[:, None] * self.matrix * half[None, :]


@dataclass(frozen=True, eq=False)
class CertificateMatrices:
    """M_τ together with its constituents, stored one block per color class."""

    pinned: PinnedInstance
    kind: CertificateKind
    blocks: tuple[ColorBlock, ...]

    @property
    def codim(self) -> int:
        """Codimension of the face."""
        return self.pinned.codim

    @cached_property
    def _by_color(self) -> dict[int, ColorBlock]:
        return {c: block for block in self.blocks for c in block.colors}

    def block_for(self, c: int) -> ColorBlock | None:
        """Block of color `c`, None when it is identically zero."""
        return self._by_color.get(c)

    @cached_property
    def index(self) -> tuple[Element, ...]:
        """Every element (v, c) with c in L_v^τ."""
        return tuple(self.pinned.elements())

    def _dense(self, part: str) -> LabeledMatrix:
        position = {x: i for i, x in enumerate(self.index)}
        out = np.zeros((len(self.index), len(self.index)))
        for block in self.blocks:
            values = getattr(block, part)
            if values is None:
                continue
            data = np.diag(values) if values.ndim == 1 else values
            for c in block.colors:
                rows = np.array([position[x] for x in block.index(c)])
                out[np.ix_(rows, rows)] = data
        return LabeledMatrix(self.index, out)

    def dense(self) -> LabeledMatrix:
        """M_τ on every element of the face."""
        return self._dense("matrix")

    def dense_a(self) -> LabeledMatrix:
        """A_τ on every element of the face."""
        return self._dense("a")

    def dense_b(self) -> LabeledMatrix:
        """B_τ on every element of the face."""
        return self._dense("b")

    def stationary(self) -> LabeledMatrix:
        """Π_τ on every element of the face."""
        k = self.codim
        probabilities = marginals(self.pinned)
        return LabeledMatrix.diagonal(self.index, [probabilities[x] / k for x in self.index])

    @property
    def lambda1(self) -> float:
        """λ₁(Π_τ^{-1}M_τ); elements outside every block contribute eigenvalue 0."""
        values = [max_eigenvalue(block.normalized) for block in self.blocks]
        covered = sum(len(block.colors) * len(block.vertices) for block in self.blocks)
        if covered < len(self.index):
            values.append(0.0)
        return max(values, default=0.0)


def blockwise_leq(
    label: str, pairs: Iterable[tuple[Array, Array]], tol: float | None = None
) -> LoewnerReport:
    """A ⪯ B for a block-diagonal pair, checked block by block.

    The returned report is that of the block with the smallest relative slack;
    an empty pair list passes trivially.
    """
    worst: LoewnerReport | None = None
    passed = True
    for left, right in pairs:
        report = loewner_leq(left, right, tol, label=label)
        passed = passed and report.passed
        if worst is None or _relative(report) < _relative(worst):
            worst = report
    if worst is None:
        return LoewnerReport(label=label, min_eig_diff=0.0, tolerance=0.0, scale=0.0, passed=True)
    return worst.model_copy(update={"passed": passed})


def _relative(report: LoewnerReport) -> float:
    return report.min_eig_diff / max(1.0, report.scale)
