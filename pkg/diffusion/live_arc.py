"""
Live-arc graphs: a random deterministic subgraph whose reachable set from the
seeds has the same distribution as the cascade's active set.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

import numpy as np

from graph.store import DirectedGraph
from diffusion.outcome import CascadeOutcome, Model, check_seeds, parse_model
from diffusion.streams import ReplicationStream


@dataclass(frozen=True)
class LiveArcGraph:
    graph: DirectedGraph
    model: Model
    live: Tuple[bool, ...]  # per arc of graph
    _live_out: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        live_out: List[List[int]] = [[] for _ in range(self.graph.n)]
        for u in range(self.graph.n):
            for v, e in self.graph.out_edges[u]:
                if self.live[e]:
                    live_out[u].append(v)
        object.__setattr__(self, '_live_out', tuple(tuple(vs) for vs in live_out))

    @property
    def edge_count(self) -> int:
        return sum(self.live)

    def live_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.graph.n) for v in self._live_out[u]]

    def reachable(self, seeds: Iterable[int]) -> frozenset:
        """Nodes reachable from the seeds over live arcs."""
        seen = set(seeds)
        stack = list(seen)
        while stack:
            u = stack.pop()
            for v in self._live_out[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return frozenset(seen)

    def outcome(self, seeds: Iterable[int]) -> CascadeOutcome:
        """Active = live-arc reachable set; informed over all arcs of the graph."""
        active = self.reachable(check_seeds(self.graph, seeds))
        informed = {
            v
            for u in active
            for v, _ in self.graph.out_edges[u]
            if v not in active
        }
        return CascadeOutcome(active=active, informed=frozenset(informed))


def sample_live_arc(g: DirectedGraph, model, stream: ReplicationStream) -> LiveArcGraph:
    """
    Sample a live-arc graph.

    IC: arc e is live when uniform draw e of the stream is below ic_prob, the
    same draws simulate_ic consumes, so both agree path by path.
    LT: node v uses its uniform draw to keep at most one incoming arc, arc
    (u, v) with probability lt_weight(u, v) and none with 1 - sum.
    """
    model = parse_model(model)
    live = [False] * g.m
    if model is Model.IC:
        if g.m:
            draws = stream.uniforms(g.m)
            live = (draws < g.ic_prob).tolist()
        return LiveArcGraph(graph=g, model=model, live=tuple(live))

    draws = stream.uniforms(g.n).tolist() if g.n else []
    weights = g.lt_list
    for v in range(g.n):
        cumulative = 0.0
        for _, e in g.in_edges[v]:
            cumulative += weights[e]
            if draws[v] < cumulative:
                live[e] = True
                break
    return LiveArcGraph(graph=g, model=model, live=tuple(live))


def reachable_size_distribution(g: DirectedGraph, seeds: Iterable[int], model, streams) -> np.ndarray:
    """Histogram over |reachable| (index = size) for a batch of live-arc samples."""
    seeds = check_seeds(g, seeds)
    counts = np.zeros(g.n + 1, dtype=np.int64)
    for stream in streams:
        counts[len(sample_live_arc(g, model, stream).reachable(seeds))] += 1
    return counts
