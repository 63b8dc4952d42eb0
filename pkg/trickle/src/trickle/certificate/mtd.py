"""One level of matrix trickle-down on an explicit weighted link."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from trickle.complex import local_walk
from trickle.instances import PinnedInstance
from trickle.schemas import LoewnerReport, MtdReport
from trickle.specmat import Array, pinv_diag

from .assemble import certificate_matrix
from .base_case import BASE_CODIM, pair_walk
from .blocks import blockwise_leq
from .errors import CertificateError
from .schedule import CertificateSchedule

MIN_MTD_CODIM = 3


@dataclass(frozen=True, eq=False)
class FlatLink:
    """One vertex x of the link: its mass, stationary vector, Π_xP_x and M_x.

    Every array lives on the index of the parent link.
    """

    weight: float
    pi: Array
    walk_weights: Array
    certificate: Array


def mtd_flat_check(
    pi: Array,
    walk_weights: Array,
    links: Sequence[FlatLink],
    alpha: float,
    certificate: Array,
    *,
    tol: float | None = None,
) -> MtdReport:
    """Check the hypotheses of one matrix trickle-down step, then its conclusion.

    Hypotheses, with Π = diag(π) and W = ΠP:
    Π_xP_x − απ_xπ_xᵀ ⪯ M_x ⪯ Π_x/(2α + 1) for every x, M ⪯ Π/(2α) and
    E_x[M_x] ⪯ M − αMΠ^{-1}M. Conclusion: ΠP − (2 − 1/α)ππᵀ ⪯ M. The
    conclusion is only evaluated when every hypothesis holds.
    """
    if alpha <= 0:
        msg = f"alpha must be positive, got {alpha}"
        raise CertificateError(msg)
    stationary = np.diag(pi)
    lower = [
        (link.walk_weights - alpha * np.outer(link.pi, link.pi), link.certificate)
        for link in links
    ]
    upper = [(link.certificate, np.diag(link.pi) / (2 * alpha + 1)) for link in links]
    expected = sum((link.weight * link.certificate for link in links), np.zeros_like(certificate))
    inverse = np.diag(pinv_diag(pi))
    hypotheses: list[LoewnerReport] = [
        blockwise_leq("link-lower", lower, tol),
        blockwise_leq("link-upper", upper, tol),
        blockwise_leq("parent-upper", [(certificate, stationary / (2 * alpha))], tol),
        blockwise_leq(
            "expectation",
            [(expected, certificate - alpha * certificate @ inverse @ certificate)],
            tol,
        ),
    ]
    if not all(h.passed for h in hypotheses):
        return MtdReport(
            alpha=alpha, hypotheses=hypotheses, conclusion=None, status="hypotheses unmet"
        )
    conclusion = blockwise_leq(
        "conclusion", [(walk_weights - (2 - 1 / alpha) * np.outer(pi, pi), certificate)], tol
    )
    return MtdReport(
        alpha=alpha,
        hypotheses=hypotheses,
        conclusion=conclusion,
        status="pass" if conclusion.passed else "fail",
    )


def face_mtd_check(pinned: PinnedInstance, schedule: CertificateSchedule) -> MtdReport:
    """Run the one-level check at a face of codim k ≥ 3 with α = (k − 1)/(k − 2).

    Every walk and certificate is materialized on the elements of τ, so this
    is meant for enumerable faces.
    """
    k = pinned.codim
    if k < MIN_MTD_CODIM:
        msg = f"one-level check needs codim ≥ 3, got {k}"
        raise CertificateError(msg)
    parent = certificate_matrix(pinned, schedule)
    index = parent.index
    pi = parent.stationary().diag()
    walk = local_walk(pinned)
    links = []
    for x, mass in zip(index, pi, strict=True):
        if mass <= 0:
            continue
        child = pinned.extend(*x)
        child_walk = pair_walk(child) if child.codim == BASE_CODIM else local_walk(child)
        child_certificate = certificate_matrix(child, schedule)
        links.append(
            FlatLink(
                weight=float(mass),
                pi=child_certificate.stationary().reindex(index).diag(),
                walk_weights=child_walk.weights.reindex(index).data,
                certificate=child_certificate.dense().reindex(index).data,
            )
        )
    return mtd_flat_check(
        pi,
        walk.weights.reindex(index).data,
        links,
        (k - 1) / (k - 2),
        parent.dense().data,
    )
