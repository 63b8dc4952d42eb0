from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import eigsh

from trickle.counting import count_extensions
from trickle.instances import ColoringInstance, root
from trickle.logger import get_logger
from trickle.settings import get_settings
from trickle.specmat import Array, LabeledMatrix, eigenvalues

from .errors import TooManyFacetsError

logger = get_logger(__name__)

DENSE_LIMIT = 4096

type Coloring = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GlauberChain:
    """Exact Glauber dynamics on the proper colorings of an instance.

    A step picks a vertex uniformly and recolors it uniformly among the colors
    of its list not used by its neighbors, its own color included.
    """

    instance: ColoringInstance
    states: tuple[Coloring, ...]
    transition: sparse.csr_array

    @property
    def size(self) -> int:
        """Number of proper colorings."""
        return len(self.states)

    def dense(self) -> Array:
        """Transition matrix as a dense array."""
        return self.transition.toarray()

    def labeled(self) -> LabeledMatrix:
        """Transition matrix indexed by colorings."""
        return LabeledMatrix(self.states, self.dense())

    @cached_property
    def detailed_balance_deviation(self) -> float:
        """max |P(σ, σ′) − P(σ′, σ)|; the uniform distribution is reversible iff it is 0."""
        skew = self.transition - self.transition.T
        return float(abs(skew).max()) if skew.nnz else 0.0

    @cached_property
    def stationarity_deviation(self) -> float:
        """max |(uP)(σ) − u(σ)| for the uniform row vector u."""
        uniform = np.full(self.size, 1 / self.size)
        return float(np.max(np.abs(uniform @ self.transition - uniform)))


def _allowed(instance: ColoringInstance, coloring: Coloring, v: int) -> list[int]:
    taken = {coloring[u] for u in instance.adjacency[v]}
    return sorted(instance.lists[v] - taken)


def glauber_chain(instance: ColoringInstance, *, cap: int | None = None) -> GlauberChain:
    """Build the exact chain over every proper coloring.

    Raises TooManyFacetsError when the colorings outnumber `cap`.
    """
    cap = cap if cap is not None else get_settings().cap_facets
    start = root(instance)
    total = count_extensions(start).value
    if total > cap:
        raise TooManyFacetsError("glauber facets", total, cap)
    states = tuple(
        tuple(coloring[v] for v in range(instance.n)) for coloring in start.residual.colorings()
    )
    position = {state: i for i, state in enumerate(states)}
    n = instance.n
    rows, cols, values = [], [], []
    for i, state in enumerate(states):
        for v in range(n):
            allowed = _allowed(instance, state, v)
            p = 1 / (n * len(allowed))
            for c in allowed:
                rows.append(i)
                cols.append(position[(*state[:v], c, *state[v + 1 :])])
                values.append(p)
    transition = sparse.csr_array((values, (rows, cols)), shape=(len(states), len(states)))
    logger.debug("Built Glauber chain", extra={"n": n, "states": len(states)})
    return GlauberChain(instance, states, transition)


def glauber_matrix(instance: ColoringInstance, *, cap: int | None = None) -> LabeledMatrix:
    """P_GL indexed by proper colorings."""
    return glauber_chain(instance, cap=cap).labeled()


@dataclass(frozen=True)
class SpectralGap:
    """Spectral quantities of a reversible chain."""

    lambda2: float
    min_eigenvalue: float

    @property
    def gap(self) -> float:
        """1 − λ₂."""
        return 1 - self.lambda2

    @property
    def absolute_gap(self) -> float:
        """1 − max |λ| over eigenvalues other than the top one."""
        return 1 - max(abs(self.lambda2), abs(self.min_eigenvalue))


def spectral_gap(chain: GlauberChain | Array) -> SpectralGap:
    """Eigenvalues of a chain reversible for the uniform distribution, so symmetric.

    Small chains are solved densely; larger ones go through a sparse Lanczos
    solve for the two largest and the smallest eigenvalue.
    """
    matrix = chain.transition if isinstance(chain, GlauberChain) else chain
    size = matrix.shape[0]
    if size == 1:
        return SpectralGap(lambda2=0.0, min_eigenvalue=0.0)
    if size <= DENSE_LIMIT:
        dense = matrix.toarray() if sparse.issparse(matrix) else np.asarray(matrix)
        values = eigenvalues(dense)
        return SpectralGap(lambda2=float(values[-2]), min_eigenvalue=float(values[0]))
    top = eigsh(matrix, k=2, which="LA", return_eigenvectors=False)
    bottom = eigsh(matrix, k=1, which="SA", return_eigenvectors=False)
    return SpectralGap(lambda2=float(np.min(top)), min_eigenvalue=float(bottom[0]))
