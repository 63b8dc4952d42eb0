"""Seeded Glauber simulation for instances too large to build exactly."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from time import perf_counter

import numpy as np

from trickle.counting import marginals
from trickle.instances import ColoringInstance, root
from trickle.logger import get_logger
from trickle.misc import runtime_info
from trickle.schemas import ChainSummary, MarginalEstimate, SimulationReport
from trickle.settings import get_settings

from .errors import DynamicsError, InitialColoringError
from .glauber import Coloring

logger = get_logger(__name__)


def greedy_coloring(instance: ColoringInstance) -> Coloring:
    """Give each vertex in order the smallest list color its colored neighbors leave."""
    colors: list[int] = []
    for v in range(instance.n):
        taken = {colors[u] for u in instance.adjacency[v] if u < v}
        allowed = sorted(instance.lists[v] - taken)
        if not allowed:
            msg = f"greedy coloring is stuck at vertex {v}"
            raise InitialColoringError(msg)
        colors.append(allowed[0])
    return tuple(colors)


def chain_rng(seed: int, chain: int) -> np.random.Generator:
    """Counter-based stream for one chain; streams of distinct chains never overlap."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chain,))))


def _run_chain(
    instance: ColoringInstance, start: Coloring, steps: int, thin: int, seed: int, chain: int
) -> ChainSummary:
    rng = chain_rng(seed, chain)
    vertices = rng.integers(instance.n, size=steps)
    draws = rng.random(steps)
    colors = list(start)
    order = [sorted(lst) for lst in instance.lists]
    position = [{c: j for j, c in enumerate(lst)} for lst in order]
    counts = [np.zeros(len(lst), dtype=np.int64) for lst in order]
    accepted = 0
    samples = 0
    for step, (v, u) in enumerate(zip(vertices.tolist(), draws.tolist(), strict=True), start=1):
        taken = {colors[w] for w in instance.adjacency[v]}
        allowed = [c for c in order[v] if c not in taken]
        c = allowed[int(u * len(allowed))]
        if c != colors[v]:
            accepted += 1
            colors[v] = c
        if step % thin == 0:
            samples += 1
            for w, color in enumerate(colors):
                counts[w][position[w][color]] += 1
    estimates = [
        MarginalEstimate(vertex=v, color=c, estimate=float(counts[v][j]) / max(samples, 1))
        for v, lst in enumerate(order)
        for j, c in enumerate(lst)
    ]
    return ChainSummary(
        chain=chain,
        steps=steps,
        thin=thin,
        samples=samples,
        acceptance_rate=accepted / steps if steps else 0.0,
        final_coloring=colors,
        marginals=estimates,
    )


def simulate(
    instance: ColoringInstance,
    steps: int,
    *,
    seed: int | None = None,
    chains: int = 1,
    thin: int = 1,
    start: Sequence[int] | None = None,
    workers: int | None = None,
) -> SimulationReport:
    """Run independent chains from a proper start and estimate vertex marginals.

    Each step picks a vertex uniformly and recolors it uniformly among the
    colors its neighbors leave free. Chain `i` draws from the stream keyed by
    `(seed, i)`, so results do not depend on `workers`.
    """
    if steps < 0 or chains < 1 or thin < 1:
        msg = f"invalid simulation sizes: steps={steps}, chains={chains}, thin={thin}"
        raise DynamicsError(msg)
    settings = get_settings()
    seed = seed if seed is not None else settings.seed
    initial = tuple(start) if start is not None else greedy_coloring(instance)
    if len(initial) != instance.n or any(
        initial[v] not in instance.lists[v] or any(initial[u] == initial[v] for u in adj)
        for v, adj in enumerate(instance.adjacency)
    ):
        msg = f"start {list(initial)} is not a proper list coloring"
        raise InitialColoringError(msg)

    started = perf_counter()
    logger.info("Starting simulation", extra={"steps": steps, "chains": chains, "seed": seed})
    with ThreadPoolExecutor(max_workers=workers or settings.workers) as pool:
        summaries = list(
            pool.map(
                lambda i: _run_chain(instance, initial, steps, thin, seed, i), range(chains)
            )
        )
    report = SimulationReport(
        seed=seed, steps=steps, chains=summaries, runtime=runtime_info(started)
    )
    logger.info(
        "Finished simulation",
        extra={"acceptance": [round(s.acceptance_rate, 4) for s in summaries]},
    )
    return report


def marginal_z_scores(
    summary: ChainSummary, instance: ColoringInstance
) -> dict[tuple[int, int], float]:
    """Binomial z-score of every estimated marginal against the exact one.

    Exact marginals of 0 or 1 have no spread; their score is 0 when the
    estimate matches and infinite otherwise.
    """
    exact = marginals(root(instance))
    scores: dict[tuple[int, int], float] = {}
    for estimate in summary.marginals:
        p = exact[(estimate.vertex, estimate.color)]
        spread = np.sqrt(p * (1 - p) / max(summary.samples, 1))
        deviation = estimate.estimate - p
        if spread > 0:
            scores[(estimate.vertex, estimate.color)] = float(deviation / spread)
        else:
            scores[(estimate.vertex, estimate.color)] = 0.0 if deviation == 0 else float("inf")
    return scores
