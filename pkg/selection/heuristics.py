"""
Model-free seed heuristics: effective degree rank and the degree / random
baselines.
"""

import heapq
import time
from typing import List

import numpy as np

from graph.store import DirectedGraph
from selection.greedy import check_budget
from selection.schema import SelectionResult


def effective_degree_rank(g: DirectedGraph, k: int) -> SelectionResult:
    """
    Effective degree rank.

    Effective degree = out-degree minus out-neighbours already covered, where
    the covered set C collects the out-neighbours of every chosen seed. Each
    round picks the unselected node with the largest effective degree (ties
    to the smallest id), then adds its out-neighbours to C.

    Covering a node w lowers the effective degree of each in-neighbour of w by
    one, so only those nodes are updated: O(k log n + m log n) overall with the
    lazy heap below.

    Returns:
        SelectionResult whose marginal_gains are the effective degrees at
        selection time; objective_value is None
    """
    start_time = time.perf_counter()
    k = check_budget(g, k)

    effective = [len(edges) for edges in g.out_edges]
    covered = [False] * g.n
    selected = [False] * g.n
    heap = [(-effective[v], v) for v in range(g.n)]
    heapq.heapify(heap)

    seeds: List[int] = []
    scores: List[float] = []
    while len(seeds) < k:
        neg_degree, v = heapq.heappop(heap)
        if selected[v]:
            continue
        if -neg_degree != effective[v]:
            # stale entry; effective degrees only decrease
            heapq.heappush(heap, (-effective[v], v))
            continue

        selected[v] = True
        seeds.append(v)
        scores.append(float(effective[v]))
        for w, _ in g.out_edges[v]:
            if covered[w]:
                continue
            covered[w] = True
            for u, _ in g.in_edges[w]:
                effective[u] -= 1

    return SelectionResult(
        algorithm="effective-degree",
        seeds=seeds,
        marginal_gains=scores,
        evaluations_per_step=[0] * len(seeds),
        objective_value=None,
        wall_time=time.perf_counter() - start_time,
    )


def baseline_out_degree(g: DirectedGraph, k: int) -> SelectionResult:
    """Top-k nodes by raw out-degree, ties to the smallest id."""
    start_time = time.perf_counter()
    k = check_budget(g, k)
    ranking = sorted(range(g.n), key=lambda v: (-len(g.out_edges[v]), v))[:k]
    return SelectionResult(
        algorithm="out-degree",
        seeds=ranking,
        marginal_gains=[float(len(g.out_edges[v])) for v in ranking],
        evaluations_per_step=[0] * len(ranking),
        objective_value=None,
        wall_time=time.perf_counter() - start_time,
    )


def baseline_random(g: DirectedGraph, k: int, seed: int) -> SelectionResult:
    """Uniform k-subset without replacement; deterministic given seed."""
    start_time = time.perf_counter()
    k = check_budget(g, k)
    rng = np.random.Generator(np.random.Philox(key=int(seed) & 0xFFFFFFFFFFFFFFFF))
    picks = [int(v) for v in rng.choice(g.n, size=k, replace=False)] if k else []
    return SelectionResult(
        algorithm="random",
        seeds=picks,
        marginal_gains=[0.0] * len(picks),
        evaluations_per_step=[0] * len(picks),
        objective_value=None,
        wall_time=time.perf_counter() - start_time,
    )
