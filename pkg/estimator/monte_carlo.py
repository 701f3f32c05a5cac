"""
Monte Carlo estimation of weighted information coverage
W(S) = E|A| + lambda * E|L|.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config import DEFAULT_LAMBDA, DEFAULT_REPLICATIONS, DEFAULT_SEED, get_thread_count
from graph.store import DirectedGraph, require_parameters
from diffusion.cascade import simulate_ic, simulate_lt
from diffusion.outcome import Model, check_seeds, parse_model
from diffusion.streams import ReplicationStream
from utils import standard_error

logger = logging.getLogger(__name__)


# --- Pydantic Models ---
class CoverageConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: float = Field(DEFAULT_LAMBDA, ge=0.0, le=1.0)
    replications: int = Field(DEFAULT_REPLICATIONS, ge=1)
    master_seed: int = Field(DEFAULT_SEED, ge=0, lt=2 ** 64)


@dataclass(frozen=True)
class CoverageEstimate:
    """Monte Carlo estimate with its decomposition into E|A| and E|L|."""
    mean: float
    std_error: float
    R_used: int
    active_mean: float
    informed_mean: float


def _run_chunk(g, seeds, simulate, master_seed, start, stop, active, informed):
    for i in range(start, stop):
        outcome = simulate(g, seeds, ReplicationStream(master_seed, i))
        active[i] = len(outcome.active)
        informed[i] = len(outcome.informed)


def simulate_counts(
    g: DirectedGraph,
    seeds: Iterable[int],
    model,
    master_seed: int,
    replications: int,
    threads: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Run replications 0..R-1 and return per-replication (|A|, |L|) counts.

    Replication i always reads stream (master_seed, i) and writes slot i, so
    the arrays are identical for every thread count.
    """
    seeds = check_seeds(g, seeds)
    model = parse_model(model)
    simulate = simulate_ic if model is Model.IC else simulate_lt

    active = np.zeros(replications, dtype=np.int64)
    informed = np.zeros(replications, dtype=np.int64)
    if not seeds:
        return active, informed

    threads = get_thread_count() if threads is None else max(1, threads)
    if threads == 1 or replications < 2 * threads:
        _run_chunk(g, seeds, simulate, master_seed, 0, replications, active, informed)
        return active, informed

    bounds = np.linspace(0, replications, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_run_chunk, g, seeds, simulate, master_seed,
                        int(bounds[j]), int(bounds[j + 1]), active, informed)
            for j in range(threads)
        ]
        for future in futures:
            future.result()
    return active, informed


def summarize(active: np.ndarray, informed: np.ndarray, lam: float) -> CoverageEstimate:
    values = active + lam * informed
    return CoverageEstimate(
        mean=float(np.mean(values)),
        std_error=standard_error(values),
        R_used=int(values.size),
        active_mean=float(np.mean(active)),
        informed_mean=float(np.mean(informed)),
    )


def estimate_coverage(
    g: DirectedGraph,
    seeds: Iterable[int],
    model,
    cfg: CoverageConfig,
    threads: Optional[int] = None,
) -> CoverageEstimate:
    """
    Estimate W(S) as the mean of |A_i| + lambda * |L_i| over R replications.

    Args:
        g: graph carrying the parameters of the chosen model
        seeds: seed node ids
        model: "ic" or "lt"
        cfg: lambda, replication count and master seed

    Returns:
        CoverageEstimate; deterministic given cfg
    """
    model = parse_model(model)
    require_parameters(g, model)
    active, informed = simulate_counts(g, seeds, model, cfg.master_seed, cfg.replications, threads)
    estimate = summarize(active, informed, cfg.lam)
    logger.debug("W(S) estimate %.6f +/- %.6f over %d replications", estimate.mean, estimate.std_error, estimate.R_used)
    return estimate


def influence_spread(g: DirectedGraph, seeds: Iterable[int], model, master_seed: int, replications: int) -> float:
    """Expected number of active nodes only (the lambda = 0 objective)."""
    model = parse_model(model)
    require_parameters(g, model)
    active, _ = simulate_counts(g, seeds, model, master_seed, replications)
    return float(np.mean(active))
