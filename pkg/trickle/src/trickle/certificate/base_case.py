import numpy as np

from trickle.complex import LocalWalk
from trickle.counting import count_extensions, marginals
from trickle.instances import PinnedInstance
from trickle.logger import get_logger
from trickle.specmat import LabeledMatrix

from .blocks import CertificateKind, CertificateMatrices, ColorBlock
from .errors import CertificateError

logger = get_logger(__name__)

BASE_CODIM = 2


def _require_pair(pinned: PinnedInstance) -> tuple[int, int]:
    if pinned.codim != BASE_CODIM:
        msg = f"base case needs codim 2, got {pinned.codim}"
        raise CertificateError(msg)
    u, v = pinned.free
    return u, v


def pair_walk(pinned: PinnedInstance) -> LocalWalk:
    """The local walk of a codim-2 face built in closed form.

    Every proper pair (uc, vd) has exactly one completion, so the walk needs
    no counting beyond the total.
    """
    u, v = _require_pair(pinned)
    total = count_extensions(pinned).value
    if total == 0:
        msg = f"face {pinned.describe()} has no completion"
        raise CertificateError(msg)
    lists = pinned.residual_lists
    colors_u = np.array(sorted(lists[u]))
    colors_v = np.array(sorted(lists[v]))
    cross = np.ones((colors_u.size, colors_v.size))
    if v in pinned.residual.neighbors[u]:
        cross[colors_u[:, None] == colors_v[None, :]] = 0.0
    size = colors_u.size + colors_v.size
    weights = np.zeros((size, size))
    weights[: colors_u.size, colors_u.size :] = cross
    weights[colors_u.size :, : colors_u.size] = cross.T
    weights /= 2 * total
    pi = weights.sum(axis=1)
    index = [(u, int(c)) for c in colors_u] + [(v, int(c)) for c in colors_v]
    support = np.flatnonzero(pi > 0)
    kept = tuple(index[i] for i in support)
    return LocalWalk(
        pinned=pinned,
        index=kept,
        pi=pi[support],
        weights=LabeledMatrix(kept, weights[np.ix_(support, support)]),
    )


def base_case_matrix(pinned: PinnedInstance, *, beta: int | None = None) -> CertificateMatrices:
    """M_τ at codim 2.

    For a free edge uv and c in L_uv the block of c is −1/(2(ℓ_uℓ_v − ℓ_uv))
    off the diagonal plus π_τ(·c)/(β − 1)² on it. Every other block is zero,
    and so is all of M_τ when u and v are not adjacent.
    """
    u, v = _require_pair(pinned)
    beta = beta if beta is not None else pinned.parent.beta
    if beta <= 1:
        msg = f"base case needs β > 1, got {beta}"
        raise CertificateError(msg)
    if v not in pinned.residual.neighbors[u]:
        return CertificateMatrices(pinned, CertificateKind.BASE, ())
    residual = pinned.residual
    ell_u, ell_v = len(residual.lists[u]), len(residual.lists[v])
    off = -1 / (2 * (ell_u * ell_v - residual.shared(u, v)))
    b_one = 1 / (beta - 1) ** 2
    probabilities = marginals(pinned)
    blocks = []
    for cls in pinned.classes:
        if cls.signature != (u, v):
            continue
        pi = np.array([probabilities[(w, cls.rep)] / BASE_CODIM for w in (u, v)])
        a = np.array([[0.0, off], [off, 0.0]])
        b = np.full(BASE_CODIM, b_one)
        blocks.append(ColorBlock(cls.colors, (u, v), pi, a + np.diag(pi * b), a, b))
    logger.debug("Built base case", extra={"face": pinned.describe(), "blocks": len(blocks)})
    return CertificateMatrices(pinned, CertificateKind.BASE, tuple(blocks))
