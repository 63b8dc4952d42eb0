"""Numerical verification of the certificate, face by face."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from trickle.complex import FaceClass, iter_face_levels, local_to_global_gap, local_walk_spectrum
from trickle.instances import ColoringInstance, PinnedInstance
from trickle.logger import get_logger
from trickle.schemas import FaceVerification, InstanceSummary, LoewnerReport, VerificationReport
from trickle.settings import get_settings
from trickle.specmat import Array, conjugate, loewner_leq, pinv_diag, pinv_sqrt

from .assemble import certificate_matrix, component_faces, product_assembly
from .base_case import BASE_CODIM, base_case_matrix, pair_walk
from .blocks import CertificateKind, CertificateMatrices, blockwise_leq
from .errors import CertificateError
from .extensions import child_groups
from .schedule import CertificateSchedule

logger = get_logger(__name__)

BASE_UPPER = 1 / 5
SPECTRAL_TOLERANCE = 1e-9
PRODUCT_TOLERANCE = 1e-12
B_STRENGTHENED = 1 / 10


def verify_base(
    pinned: PinnedInstance, schedule: CertificateSchedule | None = None
) -> tuple[LoewnerReport, LoewnerReport]:
    """Π_τP_τ − 2π_τπ_τᵀ ⪯ M_τ ⪯ (1/5)Π_τ at codim 2, on every element of the face."""
    if pinned.codim != BASE_CODIM:
        msg = f"base verification needs codim 2, got {pinned.codim}"
        raise CertificateError(msg)
    certificate = (
        certificate_matrix(pinned, schedule)
        if schedule is not None
        else base_case_matrix(pinned)
    )
    walk = pair_walk(pinned)
    index = certificate.index
    m = certificate.dense()
    lower = walk.weights.reindex(index) - walk.pi_outer.reindex(index) * 2
    upper = certificate.stationary() * BASE_UPPER
    return (
        loewner_leq(lower, m, label="base-lower"),
        loewner_leq(m, upper, label="base-upper"),
    )


@dataclass(frozen=True)
class InductiveCheck:
    """Checks of one face above codim 2.

    A connected face carries the expectation and upper checks; a disconnected
    one carries the product identity deviation and the checks of its components.
    """

    kind: CertificateKind
    checks: list[LoewnerReport] = field(default_factory=list)
    product_deviation: float | None = None

    @property
    def passed(self) -> bool:
        """Whether every check holds."""
        product_ok = self.product_deviation is None or self.product_deviation <= PRODUCT_TOLERANCE
        return product_ok and all(check.passed for check in self.checks)


def _expected_block(
    pinned: PinnedInstance, c: int, vertices: tuple[int, ...], schedule: CertificateSchedule
) -> Array:
    position = {v: j for j, v in enumerate(vertices)}
    out = np.zeros((len(vertices), len(vertices)))
    for group in child_groups(pinned, c):
        block = certificate_matrix(group.child, schedule).block_for(c)
        if block is None:
            continue
        rows = np.array([position[v] for v in block.vertices])
        out[np.ix_(rows, rows)] += group.weight * block.matrix
    return out


def _product_deviation(pinned: PinnedInstance, schedule: CertificateSchedule) -> float:
    least = product_assembly(pinned, schedule)
    greatest = product_assembly(pinned, schedule, descending=True)
    deviation = 0.0
    for block in least.blocks:
        other = greatest.block_for(block.colors[0])
        data = other.matrix if other is not None else np.zeros_like(block.matrix)
        deviation = max(deviation, float(np.max(np.abs(block.matrix - data))))
    for block in greatest.blocks:
        if least.block_for(block.colors[0]) is None:
            deviation = max(deviation, float(np.max(np.abs(block.matrix))))
    return deviation


def verify_inductive(pinned: PinnedInstance, schedule: CertificateSchedule) -> InductiveCheck:
    """The inductive conditions at a face of codim k > 2.

    Connected G_τ: (i) E_{x∼π_τ}[M_{τ∪x}] ⪯ M_τ − ((k−1)/(k−2))M_τΠ_τ^{-1}M_τ and
    (ii) M_τ ⪯ ((k−1)/(3k−1))Π_τ, block by block. Disconnected G_τ: the product
    assembly must not depend on the completion η, and every component face is
    verified in turn.
    """
    k = pinned.codim
    if k <= BASE_CODIM:
        msg = f"inductive verification needs codim > 2, got {k}"
        raise CertificateError(msg)
    if not pinned.is_connected:
        checks: list[LoewnerReport] = []
        for j, (_, child) in enumerate(component_faces(pinned)):
            if child.codim == BASE_CODIM:
                parts = list(verify_base(child, schedule))
            else:
                parts = verify_inductive(child, schedule).checks
            checks += [check.relabel(f"component-{j}:{check.label}") for check in parts]
        return InductiveCheck(
            kind=CertificateKind.PRODUCT,
            checks=checks,
            product_deviation=_product_deviation(pinned, schedule),
        )
    certificate = certificate_matrix(pinned, schedule)
    ratio = (k - 1) / (k - 2)
    expectation, upper = [], []
    for block in certificate.blocks:
        n = block.matrix
        inverse = np.diag(pinv_diag(block.pi))
        expected = _expected_block(pinned, block.colors[0], block.vertices, schedule)
        expectation.append((expected, n - ratio * n @ inverse @ n))
        upper.append((n, (k - 1) / (3 * k - 1) * block.stationary))
    return InductiveCheck(
        kind=CertificateKind.INDUCTIVE,
        checks=[
            blockwise_leq("inductive-expectation", expectation),
            blockwise_leq("inductive-upper", upper),
        ],
    )


@dataclass(frozen=True)
class SpectralConclusion:
    """λ₂(P_τ) against λ₁(Π_τ^{-1}M_τ)."""

    lambda2: float
    lambda1: float

    @property
    def ok(self) -> bool:
        """λ₂(P_τ) ≤ λ₁(Π_τ^{-1}M_τ) + 1e−9."""
        return self.lambda2 <= self.lambda1 + SPECTRAL_TOLERANCE


def spectral_conclusion(
    pinned: PinnedInstance, matrices: CertificateMatrices
) -> SpectralConclusion:
    """Compare the local walk's second eigenvalue with the certificate's bound."""
    return SpectralConclusion(
        lambda2=local_walk_spectrum(pinned).lambda2, lambda1=matrices.lambda1
    )


def _scaled_identity(size: int, value: float) -> Array:
    return np.eye(size) * value


def theorem_bounds(pinned: PinnedInstance, schedule: CertificateSchedule) -> list[LoewnerReport]:
    """Sufficient per-face bounds on B_τ, A_τ and N_τ.

    B_τ ⪯ (1/10)Id, Π^{-1/2}A_τΠ^{-1/2} ⪯ (2/(β−1))Id and Π^{-1/2}N_τΠ^{-1/2} ⪯ Id/(9(k−1)).

    With `strengthened_bound` off the B cap is (k−1)²/(3k−1) − 1/10. Faces
    assembled from components carry no A and B of their own and get no checks.
    """
    certificate = certificate_matrix(pinned, schedule)
    if certificate.kind is CertificateKind.PRODUCT:
        return []
    k = pinned.codim
    b_cap = (
        B_STRENGTHENED
        if get_settings().strengthened_bound
        else (k - 1) ** 2 / (3 * k - 1) - B_STRENGTHENED
    )
    a_cap = 2 / (schedule.beta - 1)
    n_cap = 1 / (9 * (k - 1))
    b_pairs, a_pairs, n_pairs = [], [], []
    for block in certificate.blocks:
        size = len(block.vertices)
        if block.b is not None:
            b_pairs.append((np.diag(block.b), _scaled_identity(size, b_cap)))
        if block.a is not None:
            half = pinv_sqrt(block.pi)
            a_pairs.append((half[:, None] * block.a * half[None, :], _scaled_identity(size, a_cap)))
        n_pairs.append((block.normalized, _scaled_identity(size, n_cap)))
    return [
        blockwise_leq("theorem-b", b_pairs),
        blockwise_leq("theorem-a", a_pairs),
        blockwise_leq("theorem-n", n_pairs),
    ]


@dataclass(frozen=True)
class _FaceOutcome:
    face: FaceClass
    kind: CertificateKind
    checks: list[LoewnerReport]
    product_deviation: float | None
    theorem: list[LoewnerReport]
    conclusion: SpectralConclusion

    @property
    def own_ok(self) -> bool:
        product_ok = self.product_deviation is None or self.product_deviation <= PRODUCT_TOLERANCE
        return product_ok and all(check.passed for check in self.checks)


def _verify_face(face: FaceClass, schedule: CertificateSchedule) -> _FaceOutcome:
    pinned = face.rep
    certificate = certificate_matrix(pinned, schedule)
    if pinned.codim == BASE_CODIM:
        checks, deviation = list(verify_base(pinned, schedule)), None
    else:
        inductive = verify_inductive(pinned, schedule)
        checks, deviation = inductive.checks, inductive.product_deviation
    return _FaceOutcome(
        face=face,
        kind=certificate.kind,
        checks=checks,
        product_deviation=deviation,
        theorem=theorem_bounds(pinned, schedule),
        conclusion=spectral_conclusion(pinned, certificate),
    )


def _summary(instance: ColoringInstance) -> InstanceSummary:
    return InstanceSummary(
        n=instance.n,
        q=instance.q,
        max_degree=instance.max_degree,
        beta=instance.beta,
        line_graph_certified=instance.line_graph_certified,
        labels=list(instance.labels),
    )


def _record(outcome: _FaceOutcome, *, chain_ok: bool) -> FaceVerification:
    pinned = outcome.face.rep
    k = pinned.codim
    conclusion = outcome.conclusion
    # the conclusion only follows once every face below τ and τ itself passed
    asserted = chain_ok and outcome.own_ok
    spectral_ok = conclusion.ok if asserted else None
    mains_bound = 1 / (9 * (k - 1))
    return FaceVerification(
        face=pinned.describe(),
        codim=k,
        class_size=outcome.face.size,
        kind=outcome.kind.value,
        connected=pinned.is_connected,
        checks=outcome.checks,
        theorem_checks=outcome.theorem,
        product_deviation=outcome.product_deviation,
        lambda2=conclusion.lambda2,
        lambda1=conclusion.lambda1,
        spectral_ok=spectral_ok,
        mains_bound=mains_bound,
        mains_ok=conclusion.lambda2 <= mains_bound + SPECTRAL_TOLERANCE,
        passed=outcome.own_ok and spectral_ok is not False,
    )


def verify_all(
    instance: ColoringInstance, schedule: CertificateSchedule, *, workers: int | None = None
) -> VerificationReport:
    """Verify every face class of codim ≥ 2, from codim 2 upward.

    Classes of one level are spread over a thread pool; their children sit in
    the certificate memo by then. The report names the first failing face.
    """
    workers = workers if workers is not None else get_settings().workers
    levels = [
        level for level in iter_face_levels(instance) if level and level[0].codim >= BASE_CODIM
    ]
    logger.info(
        "Verifying certificate",
        extra={"n": instance.n, "levels": len(levels), "feasible": schedule.feasible},
    )
    records: list[FaceVerification] = []
    profile: list[float] = []
    chain_ok = True
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for level in reversed(levels):
            outcomes = list(pool.map(lambda face: _verify_face(face, schedule), level))
            records += [_record(outcome, chain_ok=chain_ok) for outcome in outcomes]
            chain_ok = chain_ok and all(outcome.own_ok for outcome in outcomes)
            profile.append(max(outcome.conclusion.lambda2 for outcome in outcomes))
    profile.reverse()
    first_failure = next((record.face for record in records if not record.passed), None)
    report = VerificationReport(
        instance=_summary(instance),
        schedule=schedule.report(),
        faces=records,
        profile=profile,
        global_gap_bound=local_to_global_gap(profile).bound if profile else None,
        passed=first_failure is None,
        first_failure=first_failure,
    )
    logger.info(
        "Verified certificate",
        extra={"faces": len(records), "passed": report.passed, "first_failure": first_failure},
    )
    return report


def normalized_certificate(matrices: CertificateMatrices) -> Array:
    """Π_τ^{-1/2}M_τΠ_τ^{-1/2} on every element of the face."""
    stationary = matrices.stationary()
    return conjugate(matrices.dense(), pinv_sqrt(stationary.diag())).data
