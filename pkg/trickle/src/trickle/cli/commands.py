from collections.abc import Callable
from time import perf_counter

from trickle.certificate import build_schedule, verify_all
from trickle.complex import garland_suite
from trickle.constraints import (
    HEADLINE_CONSTANT,
    joint_search,
    lemma_grid,
    min_p_table,
    sup_ratio,
    threshold_table,
)
from trickle.dynamics import (
    TooManyFacetsError,
    glauber_chain,
    mixing_time_exact,
    simulate,
)
from trickle.instances import ColoringInstance
from trickle.logger import get_logger
from trickle.misc import runtime_info
from trickle.schemas import ConstraintReport, MixingReport, SimulationReport
from trickle.specmat import lemma_property_suite

from .documents import Command, RunConfig, SampleMode, load_instance
from .reporting import emit, verdict

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1


def _exit_code(*, passed: bool) -> int:
    return EXIT_OK if passed else EXIT_FAILED


def cmd_verify(config: RunConfig) -> int:
    """Verify the certificate on every face of the instance; exit 1 names the first failure."""
    started = perf_counter()
    instance = load_instance(config.require_instance(), q=config.q)
    beta = config.beta_override if config.beta_override is not None else instance.beta
    schedule = build_schedule(
        max(instance.max_degree, 1), beta, config.iota_override, allow_undersized=True
    )
    report = verify_all(instance, schedule, workers=config.workers)
    if config.runtime:
        report = report.model_copy(update={"runtime": runtime_info(started)})
    emit(report, {"faces": report.faces}, config.output_format, config.output)
    if report.passed:
        verdict(f"verify: PASS ({len(report.faces)} face classes)")
    else:
        logger.error("Verification failed", extra={"first_failure": report.first_failure})
        verdict(f"verify: FAIL at {report.first_failure}")
    return _exit_code(passed=report.passed)


def cmd_constraints(config: RunConfig) -> int:
    """Threshold tables, minimal-p tables and the headline-constant sweep."""
    started = perf_counter()
    sup, argmax = sup_ratio()
    joint = None
    if config.delta is not None and config.beta_override is not None:
        schedule = build_schedule(
            config.delta, config.beta_override, config.iota_override, allow_undersized=True
        )
        joint = joint_search(config.delta, config.beta_override, schedule.c_delta, list(schedule.b))
    report = ConstraintReport(
        sup_ratio=sup,
        sup_argmax_delta=argmax,
        constant=HEADLINE_CONSTANT,
        sup_below_constant=sup < HEADLINE_CONSTANT,
        thresholds=threshold_table(range(2, config.max_delta + 1), config.iota_override),
        min_p=min_p_table(lemma_grid()),
        joint=joint,
        runtime=runtime_info(started) if config.runtime else None,
    )
    emit(
        report,
        {"thresholds": report.thresholds, "min_p": report.min_p},
        config.output_format,
        config.output,
    )
    verdict(
        f"sup ratio < {HEADLINE_CONSTANT:g}: {'PASS' if report.sup_below_constant else 'FAIL'}"
    )
    return _exit_code(passed=report.sup_below_constant)


def _sample_exact(config: RunConfig, instance: ColoringInstance) -> MixingReport | None:
    try:
        chain = glauber_chain(instance, cap=config.cap_facets)
    except TooManyFacetsError:
        if config.mode is SampleMode.EXACT:
            raise
        logger.info("Too many colorings for the exact chain, simulating instead")
        return None
    return mixing_time_exact(chain, config.eps, seed=config.seed)


def _sample_simulated(config: RunConfig, instance: ColoringInstance) -> SimulationReport:
    return simulate(
        instance,
        config.steps,
        seed=config.seed,
        chains=config.chains,
        thin=config.thin,
        workers=config.workers,
    )


def cmd_sample(config: RunConfig) -> int:
    """Exact mixing curve when the chain fits under the facet cap, a simulation otherwise."""
    instance = load_instance(config.require_instance(), q=config.q, require_slack=False)
    mixing = None
    if config.mode is not SampleMode.SIMULATE:
        mixing = _sample_exact(config, instance)
    if mixing is not None:
        rows = [{"t": t, "tv": tv} for t, tv in mixing.tv_curve]
        emit(mixing, {"tv_curve": rows}, config.output_format, config.output)
        verdict(
            f"t_mix({mixing.eps:g}) = {mixing.t_mix_measured}, bound {mixing.t_mix_bound:.3f}"
        )
        return _exit_code(passed=mixing.within_bound)

    report = _sample_simulated(config, instance)
    if not config.runtime:
        report = report.model_copy(update={"runtime": None})
    marginal_rows = [
        {"chain": chain.chain, "vertex": m.vertex, "color": m.color, "estimate": m.estimate}
        for chain in report.chains
        for m in chain.marginals
    ]
    chain_rows = [
        {
            "chain": chain.chain,
            "samples": chain.samples,
            "acceptance_rate": chain.acceptance_rate,
            "final_coloring": chain.final_coloring,
        }
        for chain in report.chains
    ]
    emit(
        report,
        {"chains": chain_rows, "marginals": marginal_rows},
        config.output_format,
        config.output,
    )
    verdict(f"simulated {len(report.chains)} chain(s) for {report.steps} steps")
    return EXIT_OK


def cmd_garland(config: RunConfig) -> int:
    """Check the link identities on every face class of the instance."""
    started = perf_counter()
    instance = load_instance(config.require_instance(), q=config.q, require_slack=False)
    report = garland_suite(instance)
    if config.runtime:
        report = report.model_copy(update={"runtime": runtime_info(started)})
    emit(report, {"links": report.links}, config.output_format, config.output)
    verdict(f"garland: {'PASS' if report.passed else 'FAIL'} ({len(report.links)} links)")
    return _exit_code(passed=report.passed)


def cmd_lemmas(config: RunConfig) -> int:
    """Randomized trials of every matrix inequality family."""
    started = perf_counter()
    report = lemma_property_suite(config.seed, trials=config.trials, tol=config.tol_eig)
    if config.runtime:
        report = report.model_copy(update={"runtime": runtime_info(started)})
    emit(report, {"families": report.families}, config.output_format, config.output)
    verdict(f"lemmas: {'PASS' if report.passed else 'FAIL'}")
    return _exit_code(passed=report.passed)


COMMANDS: dict[Command, Callable[[RunConfig], int]] = {
    Command.VERIFY: cmd_verify,
    Command.CONSTRAINTS: cmd_constraints,
    Command.SAMPLE: cmd_sample,
    Command.GARLAND: cmd_garland,
    Command.LEMMAS: cmd_lemmas,
}
