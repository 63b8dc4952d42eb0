import numpy as np

from trickle.instances import PinnedInstance
from trickle.specmat import LabeledMatrix

from .schedule import CertificateSchedule


def b_value(pinned: PinnedInstance, v: int, schedule: CertificateSchedule) -> float:
    """B_τ(vc, vc) for any color c, by the free degree of `v`.

    A leaf takes b′ at the degree of its unique free neighbor, a vertex of
    free degree d ≥ 2 takes b_d and an isolated vertex takes 0.
    """
    residual = pinned.residual
    degree = residual.degree(v)
    if degree == 0:
        return 0.0
    if degree == 1:
        (u,) = residual.neighbors[v]
        return schedule.b_prime_of(residual.degree(u))
    return schedule.b_of(degree)


def b_matrix(pinned: PinnedInstance, c: int, schedule: CertificateSchedule) -> LabeledMatrix:
    """Diagonal B_τ^c on the free vertices whose residual list holds `c`."""
    vertices = [v for v in pinned.free if c in pinned.residual_lists[v]]
    values = np.array([b_value(pinned, v, schedule) for v in vertices])
    return LabeledMatrix.diagonal([(v, c) for v in vertices], values)
