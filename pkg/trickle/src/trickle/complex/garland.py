import numpy as np

from trickle.counting import marginals
from trickle.instances import ColoringInstance, PinnedInstance
from trickle.logger import get_logger
from trickle.schemas import GarlandReport, GarlandSuiteReport
from trickle.specmat import Array

from .faces import iter_face_levels
from .link import MIN_WALK_CODIM, local_walk

logger = get_logger(__name__)

GARLAND_TOLERANCE = 1e-10


def _max_dev(a: Array, b: Array) -> float:
    return float(np.max(np.abs(a - b), initial=0.0))


def garland_check(pinned: PinnedInstance, *, tol: float = GARLAND_TOLERANCE) -> GarlandReport:
    """Check E_x[Π_x] = Π, E_x[Π_xP_x] = ΠP and E_x[π_xπ_xᵀ] = ΠP² at the link of τ.

    x is drawn from π_τ and the children are embedded in the index of τ with zero
    fill. The middle identity needs a walk at τ ∪ x, so it is skipped at codim 2.
    """
    walk = local_walk(pinned)
    k = walk.codim
    index = walk.index
    position = walk.weights.position
    size = len(index)
    expected_pi = np.zeros(size)
    expected_walk = np.zeros((size, size))
    expected_outer = np.zeros((size, size))
    with_walk = k - 1 >= MIN_WALK_CODIM
    for x, weight in zip(index, walk.pi, strict=True):
        child = pinned.extend(*x)
        child_pi = np.zeros(size)
        for y, p in marginals(child).entries.items():
            if p > 0:
                child_pi[position[y]] = p / (k - 1)
        expected_pi += weight * child_pi
        expected_outer += weight * np.outer(child_pi, child_pi)
        if with_walk:
            expected_walk += weight * local_walk(child).weights.reindex(index).data
    stationary = walk.pi
    product = walk.weights @ walk.transition
    dev_pi = _max_dev(expected_pi, stationary)
    dev_walk = _max_dev(expected_walk, walk.weights.data) if with_walk else None
    dev_outer = _max_dev(expected_outer, product.data)
    passed = max(dev_pi, dev_walk or 0.0, dev_outer) <= tol
    logger.debug(
        "Garland identities",
        extra={"face": pinned.describe(), "dev_pi": dev_pi, "passed": passed},
    )
    return GarlandReport(
        face=pinned.describe(),
        codim=k,
        max_dev_pi=dev_pi,
        max_dev_pi_p=dev_walk,
        max_dev_pi_p2=dev_outer,
        tolerance=tol,
        passed=passed,
    )


def garland_suite(
    instance: ColoringInstance, *, tol: float = GARLAND_TOLERANCE
) -> GarlandSuiteReport:
    """Run `garland_check` on one representative of every face class of codim ≥ 2."""
    links = [
        garland_check(face.rep, tol=tol)
        for level in iter_face_levels(instance)
        for face in level
        if face.codim >= MIN_WALK_CODIM
    ]
    passed = all(link.passed for link in links)
    logger.info("Garland suite finished", extra={"links": len(links), "passed": passed})
    return GarlandSuiteReport(links=links, passed=passed)
