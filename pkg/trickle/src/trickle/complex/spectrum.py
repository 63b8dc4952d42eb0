from dataclasses import dataclass
from itertools import product

import numpy as np

from trickle.counting import count_extensions, marginals
from trickle.instances import ImproperPinningError, PinnedInstance
from trickle.logger import get_logger
from trickle.specmat import Array, eigenvalues

from .errors import ComplexError
from .link import MIN_WALK_CODIM

logger = get_logger(__name__)


@dataclass(frozen=True)
class WalkSpectrum:
    """Spectrum of P_τ assembled from the color-class blocks."""

    eigenvalues: Array
    lumped_size: int
    blocks: int

    @property
    def lambda2(self) -> float:
        """Second largest eigenvalue."""
        return float(self.eigenvalues[1]) if self.eigenvalues.size > 1 else 0.0

    @property
    def size(self) -> int:
        """Number of eigenvalues, counted with multiplicity."""
        return int(self.eigenvalues.size)


def local_walk_spectrum(pinned: PinnedInstance) -> WalkSpectrum:
    """Exact spectrum of P_τ without materializing it over every color.

    Permuting the colors of one class is a symmetry of the walk, so the
    symmetrized walk splits into a block on class-constant vectors and, for each
    class of multiplicity m ≥ 2, a block S_same − S_diff repeated m − 1 times.
    """
    k = pinned.codim
    if k < MIN_WALK_CODIM:
        msg = f"local walk needs codim ≥ 2, got {k}"
        raise ComplexError(msg)
    total = count_extensions(pinned).value
    probabilities = marginals(pinned)
    classes = pinned.classes
    scale = total * k * (k - 1)

    def weight(u: int, c1: int, v: int, c2: int) -> float:
        try:
            count = count_extensions(pinned.extend_many({u: c1, v: c2})).value
        except ImproperPinningError:
            return 0.0
        pi_u = probabilities[(u, c1)] / k
        pi_v = probabilities[(v, c2)] / k
        return count / scale / np.sqrt(pi_u * pi_v)

    sites = [
        (v, j)
        for j, cls in enumerate(classes)
        for v in cls.signature
        if probabilities[(v, cls.rep)] > 0
    ]
    lumped = np.zeros((len(sites), len(sites)))
    same: dict[tuple[int, int, int], float] = {}
    diff: dict[tuple[int, int, int], float] = {}
    for a, b in product(range(len(sites)), repeat=2):
        if b <= a:
            continue
        (u, i), (v, j) = sites[a], sites[b]
        if u == v:
            continue
        ci, cj = classes[i], classes[j]
        if i != j:
            value = np.sqrt(ci.size * cj.size) * weight(u, ci.rep, v, cj.rep)
        else:
            same[(i, u, v)] = weight(u, ci.rep, v, ci.rep)
            diff[(i, u, v)] = weight(u, ci.rep, v, ci.colors[1]) if ci.size > 1 else 0.0
            value = same[(i, u, v)] + (ci.size - 1) * diff[(i, u, v)]
        lumped[a, b] = lumped[b, a] = value
    parts = [eigenvalues(lumped)]
    blocks = 1
    for i, cls in enumerate(classes):
        if cls.size == 1:
            continue
        members = [v for v, j in sites if j == i]
        block = np.zeros((len(members), len(members)))
        for a, b in product(range(len(members)), repeat=2):
            if b <= a:
                continue
            key = (i, members[a], members[b])
            block[a, b] = block[b, a] = same.get(key, 0.0) - diff.get(key, 0.0)
        parts.append(np.tile(eigenvalues(block), cls.size - 1))
        blocks += 1
    spectrum = np.sort(np.concatenate(parts))[::-1]
    logger.debug(
        "Reduced local walk spectrum",
        extra={"face": pinned.describe(), "lumped": len(sites), "blocks": blocks},
    )
    return WalkSpectrum(eigenvalues=spectrum, lumped_size=len(sites), blocks=blocks)
