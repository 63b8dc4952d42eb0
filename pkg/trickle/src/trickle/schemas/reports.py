"""Report schemas emitted by the command line."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field


class RuntimeInfo(BaseModel):
    """Process facts attached to every report."""

    version: str
    python: str
    elapsed_seconds: float
    uptime_seconds: float
    memory_mb: float


class LoewnerReport(BaseModel):
    """Outcome of one check A ⪯ B."""

    model_config = ConfigDict(frozen=True)

    label: str = ""
    min_eig_diff: float
    tolerance: float
    scale: float
    passed: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Literal["pass", "fail"]:
        """`pass` iff min_eig_diff ≥ −tolerance·max(1, scale)."""
        return "pass" if self.passed else "fail"

    def relabel(self, label: str) -> "LoewnerReport":
        """Copy with a new label."""
        return self.model_copy(update={"label": label})


class InstanceSummary(BaseModel):
    """Shape of the verified instance."""

    n: int
    q: int
    max_degree: int
    beta: int
    line_graph_certified: bool
    labels: list[str]


class ScheduleReport(BaseModel):
    """Every scalar of the certificate schedule."""

    delta: int
    beta: int
    iota: float
    gamma: float
    c_delta: float
    a: list[float]
    b_prime: list[float]
    b: list[float]
    beta_required: float
    feasible: bool
    undersized: bool
    violations: int


class FaceVerification(BaseModel):
    """All checks run on one face class."""

    face: str
    codim: int
    class_size: int
    kind: Literal["base", "inductive", "product"]
    connected: bool
    checks: list[LoewnerReport] = Field(default_factory=list)
    theorem_checks: list[LoewnerReport] = Field(default_factory=list)
    product_deviation: float | None = None
    lambda2: float | None = None
    lambda1: float | None = None
    spectral_ok: bool | None = None
    mains_bound: float | None = None
    mains_ok: bool | None = None
    passed: bool


class VerificationReport(BaseModel):
    """Result of verifying a whole instance."""

    instance: InstanceSummary
    schedule: ScheduleReport
    faces: list[FaceVerification]
    profile: list[float]
    global_gap_bound: float | None
    passed: bool
    first_failure: str | None
    runtime: RuntimeInfo | None = None


class MtdReport(BaseModel):
    """Hypotheses and conclusion of the one-level matrix trickle-down step."""

    alpha: float
    hypotheses: list[LoewnerReport]
    conclusion: LoewnerReport | None
    status: Literal["pass", "fail", "hypotheses unmet"]


class GarlandReport(BaseModel):
    """Deviations in the three Garland identities at one link."""

    face: str
    codim: int
    max_dev_pi: float
    max_dev_pi_p: float | None
    max_dev_pi_p2: float
    tolerance: float
    passed: bool


class GarlandSuiteReport(BaseModel):
    """Garland identities over every link of an instance."""

    links: list[GarlandReport]
    passed: bool
    runtime: RuntimeInfo | None = None


class LemmaFamilyReport(BaseModel):
    """Randomized trials of one matrix inequality family."""

    name: str
    trials: int
    failures: int
    worst_min_eig: float
    counterexamples: list[str] = Field(default_factory=list)


class LemmaSuiteReport(BaseModel):
    """All matrix inequality families."""

    seed: int
    families: list[LemmaFamilyReport]
    passed: bool
    runtime: RuntimeInfo | None = None


class MixingReport(BaseModel):
    """Exact spectral and total-variation measurements of a Glauber chain."""

    states: int
    spectral_gap: float
    absolute_gap: float
    min_eigenvalue: float
    eps: float
    tv_curve: list[tuple[int, float]]
    t_mix_measured: int
    t_mix_bound: float
    sampled_starts: bool
    within_bound: bool


class MarginalEstimate(BaseModel):
    """Empirical frequency of color `color` at `vertex`."""

    vertex: int
    color: int
    estimate: float


class ChainSummary(BaseModel):
    """Statistics of one simulated chain."""

    chain: int
    steps: int
    thin: int
    samples: int
    acceptance_rate: float
    final_coloring: list[int]
    marginals: list[MarginalEstimate]


class SimulationReport(BaseModel):
    """Independent Glauber chains run from a greedy start."""

    seed: int
    steps: int
    chains: list[ChainSummary]
    runtime: RuntimeInfo | None = None


class ThresholdRow(BaseModel):
    """The slack lines at one maximum degree."""

    delta: int
    iota: float
    c_delta: float
    line_base: float
    line_degree: float
    line_bprime: float
    line_b: float
    required: float
    simplified: float
    lemma_exact: float
    eps0_form: float
    simplified_dominates: bool


class MinPRow(BaseModel):
    """Smallest feasible p for one constraint system next to its closed-form bound."""

    kind: str
    c1: float
    c2: float
    c3: float | None
    alpha: float | None
    h: int
    closed_form_p: float
    min_p: float
    slack: float
    below_closed_form: bool


class JointSearchReport(BaseModel):
    """Greedy joint solution of the combined system against the composed closed forms."""

    delta: int
    beta: int
    feasible: bool
    b_prime: list[float]
    b: list[float]
    composed_b_max: float
    joint_b_max: float
    improves: bool


class ConstraintReport(BaseModel):
    """Thresholds, minimal parameters and the headline constant."""

    sup_ratio: float
    sup_argmax_delta: float
    constant: float
    sup_below_constant: bool
    thresholds: list[ThresholdRow]
    min_p: list[MinPRow]
    joint: JointSearchReport | None = None
    runtime: RuntimeInfo | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> str:
        """One-line headline verdict."""
        status = "PASS" if self.sup_below_constant else "FAIL"
        return f"sup ratio < {self.constant:g}: {status}"
