"""Randomized property checks of the matrix inequalities the certificate relies on."""

from collections.abc import Callable

import numpy as np

from trickle.logger import get_logger
from trickle.schemas.reports import LemmaFamilyReport, LemmaSuiteReport, LoewnerReport

from .labeled import Array, LabeledMatrix
from .loewner import loewner_leq, psd_sqrt

logger = get_logger(__name__)

type Trial = tuple[list[LoewnerReport], dict[str, Array]]

BLOCK_DENSITY = 0.6
SUPPORT_DENSITY = 0.8


def _dump(matrices: dict[str, Array]) -> str:
    blocks = []
    for name, m in matrices.items():
        if m.ndim == 0:
            blocks.append(f"{name} = {float(m):.17g}")
            continue
        labeled = LabeledMatrix(tuple(range(m.shape[0])), m)
        blocks.append(f"{name} =\n{labeled.to_text(precision=10)}")
    return "\n".join(blocks)


def _log_uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(np.exp(rng.uniform(np.log(lo), np.log(hi))))


def basic_inequality_trial(rng: np.random.Generator, n: int, tol: float) -> Trial:
    """ABᵀ + BAᵀ ⪯ εAAᵀ + BBᵀ/ε and the two expansions of (A ± B)(A ± B)ᵀ."""
    a, b = rng.standard_normal((n, n)), rng.standard_normal((n, n))
    eps = _log_uniform(rng, 0.1, 10.0)
    aa, bb = a @ a.T, b @ b.T
    checks = [
        loewner_leq(a @ b.T + b @ a.T, eps * aa + bb / eps, tol, label="cross"),
        loewner_leq((a + b) @ (a + b).T, (1 + eps) * aa + (1 + 1 / eps) * bb, tol, label="sum"),
        loewner_leq(
            (1 - eps) * aa + (1 - 1 / eps) * bb, (a - b) @ (a - b).T, tol, label="difference"
        ),
    ]
    return checks, {"A": a, "B": b, "eps": np.asarray(eps)}


def sum_bound_trial(rng: np.random.Generator, n: int, tol: float) -> Trial:
    """AAᵀ ⪯ Σ m_i A_iA_iᵀ for A = Σ A_i with A_i supported on U_i × U_i.

    m_i is the largest number of blocks sharing a vertex of U_i.
    """
    blocks = int(rng.integers(2, 5))
    masks = rng.random((blocks, n)) < BLOCK_DENSITY
    for mask in masks:
        if not mask.any():
            mask[rng.integers(n)] = True
    overlap = masks.sum(axis=0)
    parts = [rng.standard_normal((n, n)) * np.outer(mask, mask) for mask in masks]
    total = sum(parts, start=np.zeros((n, n)))
    weighted = sum(
        (int(overlap[mask].max()) * p @ p.T for mask, p in zip(masks, parts, strict=True)),
        start=np.zeros((n, n)),
    )
    checks = [loewner_leq(total @ total.T, weighted, tol, label="overlap")]
    return checks, {"A": total, **{f"A_{i}": p for i, p in enumerate(parts)}}


def squared_sum_trial(rng: np.random.Generator, n: int, tol: float) -> Trial:
    """(Σ A_i)Π(Σ A_i) ⪯ m·Σ A_iΠA_i for m symmetric A_i and a nonnegative diagonal Π."""
    count = int(rng.integers(1, 5))
    parts = []
    for _ in range(count):
        g = rng.standard_normal((n, n))
        parts.append((g + g.T) / 2)
    weights = rng.random(n) * (rng.random(n) < SUPPORT_DENSITY)
    pi = np.diag(weights)
    total = sum(parts, start=np.zeros((n, n)))
    right = count * sum((p @ pi @ p for p in parts), start=np.zeros((n, n)))
    checks = [loewner_leq(total @ pi @ total, right, tol, label="squared sum")]
    return checks, {"Pi": pi, **{f"A_{i}": p for i, p in enumerate(parts)}}


def product_trial(rng: np.random.Generator, n: int, tol: float) -> Trial:
    """AᵀBA ⪯ AᵀB′A whenever B ⪯ B′."""
    a = rng.standard_normal((n, n))
    g = rng.standard_normal((n, n))
    b = (g + g.T) / 2
    h = rng.standard_normal((n, n))
    b_prime = b + h @ h.T
    checks = [
        loewner_leq(b, b_prime, tol, label="hypothesis"),
        loewner_leq(a.T @ b @ a, a.T @ b_prime @ a, tol, label="congruence"),
    ]
    return checks, {"A": a, "B": b, "B_prime": b_prime}


def monotone_inverse(m: Array, eps: float) -> Array:
    """Inverse of X ↦ X(I − εX) on {X ⪯ I/(2ε)}: I/(2ε) − (I/(4ε²) − M/ε)^{1/2}."""
    identity = np.eye(m.shape[0])
    return identity / (2 * eps) - psd_sqrt(identity / (4 * eps**2) - m / eps)


def monotone_trial(rng: np.random.Generator, n: int, tol: float) -> Trial:
    """A(I − εA) ⪯ B(I − εB) with A, B ⪯ I/(2ε) implies A ⪯ B."""
    eps = _log_uniform(rng, 0.2, 5.0)
    identity = np.eye(n)
    g, h = rng.standard_normal((n, n)), rng.standard_normal((n, n))
    m_b = identity / (4 * eps) - g @ g.T / n
    m_a = m_b - h @ h.T / n
    a, b = monotone_inverse(m_a, eps), monotone_inverse(m_b, eps)
    checks = [
        loewner_leq(a - eps * a @ a, b - eps * b @ b, tol, label="hypothesis order"),
        loewner_leq(a, identity / (2 * eps), tol, label="hypothesis A bound"),
        loewner_leq(b, identity / (2 * eps), tol, label="hypothesis B bound"),
        loewner_leq(a - eps * a @ a, m_a, tol, label="inverse round trip"),
        loewner_leq(m_a, a - eps * a @ a, tol, label="inverse round trip reversed"),
        loewner_leq(a, b, tol, label="conclusion"),
    ]
    return checks, {"A": a, "B": b, "eps": np.asarray(eps)}


FAMILIES: dict[str, Callable[[np.random.Generator, int, float], Trial]] = {
    "basic_inequality": basic_inequality_trial,
    "sum_bound": sum_bound_trial,
    "squared_sum": squared_sum_trial,
    "product": product_trial,
    "monotone": monotone_trial,
}


def run_family(
    name: str,
    rng: np.random.Generator,
    *,
    trials: int = 100,
    sizes: tuple[int, int] = (2, 8),
    tol: float = 1e-9,
    max_counterexamples: int = 3,
) -> LemmaFamilyReport:
    """Run `trials` random instances of one inequality family."""
    trial = FAMILIES[name]
    failures = 0
    worst = np.inf
    counterexamples: list[str] = []
    for _ in range(trials):
        n = int(rng.integers(sizes[0], sizes[1] + 1))
        checks, matrices = trial(rng, n, tol)
        worst = min(worst, *(c.min_eig_diff / max(1.0, c.scale) for c in checks))
        failed = [c for c in checks if not c.passed]
        if failed:
            failures += 1
            if len(counterexamples) < max_counterexamples:
                labels = ", ".join(f"{c.label} ({c.min_eig_diff:.3e})" for c in failed)
                counterexamples.append(f"failed: {labels}\n{_dump(matrices)}")
    return LemmaFamilyReport(
        name=name,
        trials=trials,
        failures=failures,
        worst_min_eig=float(worst),
        counterexamples=counterexamples,
    )


def lemma_property_suite(
    rng: np.random.Generator | int,
    *,
    trials: int = 100,
    sizes: tuple[int, int] = (2, 8),
    tol: float = 1e-9,
) -> LemmaSuiteReport:
    """Run every inequality family and collect counterexamples of any failure.

    Args:
        rng (np.random.Generator | int): generator, or a seed for one.
        trials (int, optional): trials per family. Defaults to 100.
        sizes (tuple[int, int], optional): inclusive range of matrix sizes.
        tol (float, optional): relative Loewner tolerance.

    Returns:
        LemmaSuiteReport: per-family failures and worst normalized eigenvalue.

    """
    seed = rng if isinstance(rng, int) else -1
    generator = np.random.default_rng(rng) if isinstance(rng, int) else rng
    families = [
        run_family(name, generator, trials=trials, sizes=sizes, tol=tol) for name in FAMILIES
    ]
    passed = all(f.failures == 0 for f in families)
    logger.info(
        "Matrix inequality suite finished",
        extra={"trials": trials, "failures": sum(f.failures for f in families)},
    )
    return LemmaSuiteReport(seed=seed, families=families, passed=passed)
