from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

from .errors import IndexMismatchError

type Array = NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class LabeledMatrix:
    """A dense real matrix whose rows and columns share a labeled index."""

    index: tuple[Hashable, ...]
    data: Array

    def __post_init__(self) -> None:
        """Validate the shape against the index."""
        size = len(self.index)
        if self.data.shape != (size, size):
            msg = f"data of shape {self.data.shape} does not match index of size {size}"
            raise IndexMismatchError(msg)
        if len(set(self.index)) != size:
            msg = "index has duplicate labels"
            raise IndexMismatchError(msg)

    @classmethod
    def zeros(cls, index: Sequence[Hashable]) -> "LabeledMatrix":
        """Zero matrix on `index`."""
        return cls(tuple(index), np.zeros((len(index), len(index))))

    @classmethod
    def diagonal(
        cls, index: Sequence[Hashable], values: Sequence[float] | Array
    ) -> "LabeledMatrix":
        """Diagonal matrix with `values` on `index`."""
        return cls(tuple(index), np.diag(np.asarray(values, dtype=float)))

    @cached_property
    def position(self) -> dict[Hashable, int]:
        """Label -> row number."""
        return {label: i for i, label in enumerate(self.index)}

    @property
    def size(self) -> int:
        """Number of labels."""
        return len(self.index)

    def __getitem__(self, key: tuple[Hashable, Hashable]) -> float:
        """Entry at (row label, column label)."""
        row, col = key
        return float(self.data[self.position[row], self.position[col]])

    def _check(self, other: "LabeledMatrix") -> None:
        if self.index != other.index:
            msg = "labeled matrices have different indices"
            raise IndexMismatchError(msg)

    def __add__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        """Sum on a shared index."""
        self._check(other)
        return LabeledMatrix(self.index, self.data + other.data)

    def __sub__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        """Difference on a shared index."""
        self._check(other)
        return LabeledMatrix(self.index, self.data - other.data)

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        """Product on a shared index."""
        self._check(other)
        return LabeledMatrix(self.index, self.data @ other.data)

    def __mul__(self, scalar: float) -> "LabeledMatrix":
        """Scale every entry."""
        return LabeledMatrix(self.index, self.data * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "LabeledMatrix":
        """Negate every entry."""
        return LabeledMatrix(self.index, -self.data)

    @property
    def T(self) -> "LabeledMatrix":  # noqa: N802
        """Transpose."""
        return LabeledMatrix(self.index, self.data.T.copy())

    def diag(self) -> Array:
        """Diagonal entries in index order."""
        return np.diag(self.data).copy()

    def reindex(self, index: Sequence[Hashable]) -> "LabeledMatrix":
        """Copy onto `index`; labels missing here are filled with zeros, extra labels dropped."""
        out = np.zeros((len(index), len(index)))
        position = self.position
        rows = [(i, position[label]) for i, label in enumerate(index) if label in position]
        if rows:
            new, old = (np.array(x) for x in zip(*rows, strict=True))
            out[np.ix_(new, new)] = self.data[np.ix_(old, old)]
        return LabeledMatrix(tuple(index), out)

    def is_symmetric(self, tol: float) -> bool:
        """Whether the matrix equals its transpose up to `tol`."""
        return bool(np.allclose(self.data, self.data.T, rtol=0.0, atol=tol))

    def max_abs_deviation(self, other: "LabeledMatrix") -> float:
        """Largest entrywise difference on a shared index."""
        self._check(other)
        return float(np.max(np.abs(self.data - other.data), initial=0.0))

    def to_text(self, precision: int = 6) -> str:
        """Plain-text dump with index labels."""
        labels = [str(label) for label in self.index]
        width = max([len(s) for s in labels] + [precision + 8])
        header = " " * width + " ".join(s.rjust(width) for s in labels)
        rows = [
            label.rjust(width) + " ".join(f"{x: .{precision}e}".rjust(width) for x in row)
            for label, row in zip(labels, self.data, strict=True)
        ]
        return "\n".join([header, *rows])
