"""
Greedy seed selection for weighted information coverage.

lazy_greedy keeps each node's last marginal gain as an upper bound on its
current gain (W is submodular) and only recomputes the node on top of the
queue; plain_greedy recomputes every candidate each round and serves as the
reference it must agree with.
"""

import heapq
import logging
import time
from typing import Dict, List, Optional

from graph.store import DirectedGraph
from estimator.monte_carlo import CoverageConfig
from estimator.objective import CoverageObjective, make_objective
from selection.schema import LazyQueueEntry, SelectionResult
from utils import round_gain

logger = logging.getLogger(__name__)


class SelectionError(ValueError):
    """Budget outside [0, n]."""


def check_budget(g: DirectedGraph, k: int) -> int:
    if k < 0:
        raise SelectionError(f"k must be non-negative, got {k}")
    if k > g.n:
        raise SelectionError(f"k={k} exceeds the number of nodes n={g.n}")
    return int(k)


def lazy_greedy(
    g: DirectedGraph,
    model,
    k: int,
    cfg: CoverageConfig,
    evaluator: str = "monte-carlo",
    objective: Optional[CoverageObjective] = None,
) -> SelectionResult:
    """
    Lazy-forward greedy.

    Every node starts with delta = W({v}) and stamp 0. The node with the
    largest delta is popped; if its stamp equals |S| it joins S, otherwise its
    delta is recomputed as W(S + v) - W(S), stamped |S| and pushed back.

    Args:
        g: graph with the model's parameters
        model: "ic" or "lt"
        k: number of seeds
        cfg: lambda, replications and master seed for the objective
        evaluator: "monte-carlo" or "exact"
        objective: prebuilt objective (overrides evaluator)

    Returns:
        SelectionResult with per-step gains and evaluation counts
    """
    start_time = time.perf_counter()
    k = check_budget(g, k)
    if k == 0:
        return SelectionResult("lazy-greedy", [], [], [], objective_value=0.0)

    F = objective or make_objective(g, model, cfg, evaluator)

    # Initialize
    value_with: Dict[int, float] = {}
    queue: List[LazyQueueEntry] = []
    for v in range(g.n):
        value_with[v] = F([v])
        queue.append(LazyQueueEntry(node=v, delta=value_with[v], stamp=0))
    heapq.heapify(queue)

    seeds: List[int] = []
    gains: List[float] = []
    evaluations: List[int] = []
    current_value = 0.0
    step_evaluations = g.n

    while len(seeds) < k:
        entry = heapq.heappop(queue)
        if entry.stamp == len(seeds):
            seeds.append(entry.node)
            gains.append(entry.delta)
            evaluations.append(step_evaluations)
            current_value = value_with[entry.node]
            logger.info("Step %d: node %s, gain %.6f, %d evaluations",
                        len(seeds), g.labels[entry.node], entry.delta, step_evaluations)
            step_evaluations = 0
        else:
            value_with[entry.node] = F(seeds + [entry.node])
            step_evaluations += 1
            delta = value_with[entry.node] - current_value
            heapq.heappush(queue, LazyQueueEntry(node=entry.node, delta=delta, stamp=len(seeds)))

    return SelectionResult(
        algorithm="lazy-greedy",
        seeds=seeds,
        marginal_gains=gains,
        evaluations_per_step=evaluations,
        objective_value=current_value,
        wall_time=time.perf_counter() - start_time,
    )


def plain_greedy(
    g: DirectedGraph,
    model,
    k: int,
    cfg: CoverageConfig,
    evaluator: str = "monte-carlo",
    objective: Optional[CoverageObjective] = None,
) -> SelectionResult:
    """Greedy without lazy evaluation: every candidate is re-evaluated each round."""
    start_time = time.perf_counter()
    k = check_budget(g, k)
    F = objective or make_objective(g, model, cfg, evaluator)

    seeds: List[int] = []
    gains: List[float] = []
    evaluations: List[int] = []
    current_value = 0.0

    for _ in range(k):
        chosen = set(seeds)
        best_node, best_key, best_value = None, None, None
        step_evaluations = 0
        for v in range(g.n):
            if v in chosen:
                continue
            value = F(seeds + [v])
            step_evaluations += 1
            key = round_gain(value - current_value)
            if best_key is None or key > best_key:
                best_node, best_key, best_value = v, key, value
        gains.append(best_value - current_value)
        seeds.append(best_node)
        evaluations.append(step_evaluations)
        current_value = best_value

    return SelectionResult(
        algorithm="greedy",
        seeds=seeds,
        marginal_gains=gains,
        evaluations_per_step=evaluations,
        objective_value=current_value,
        wall_time=time.perf_counter() - start_time,
    )
