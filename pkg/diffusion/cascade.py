"""
Stochastic cascade simulation under the IC and LT models.

Both simulators are pure functions of (graph, seeds, stream). The informed set
is read off the final active set against all arcs of the graph.
"""

from typing import Iterable

from graph.store import DirectedGraph
from diffusion.outcome import CascadeOutcome, Model, check_seeds, parse_model
from diffusion.streams import ReplicationStream

_EMPTY = CascadeOutcome(active=frozenset(), informed=frozenset())


def simulate_ic(g: DirectedGraph, seeds: Iterable[int], stream: ReplicationStream) -> CascadeOutcome:
    """
    Independent cascade. Arc e gets uniform draw e of the stream and fires when
    the draw is below ic_prob, so each newly active node gets exactly one
    chance per out-neighbour. Rounds process nodes in ascending id.
    """
    seeds = check_seeds(g, seeds)
    if not seeds:
        return _EMPTY

    draws = stream.uniforms(g.m).tolist() if g.m else []
    probs = g.ic_list
    out_edges = g.out_edges

    active = set(seeds)
    reached = set()
    frontier = list(seeds)
    while frontier:
        newly = []
        for u in frontier:
            for v, e in out_edges[u]:
                reached.add(v)
                if v not in active and draws[e] < probs[e]:
                    active.add(v)
                    newly.append(v)
        frontier = sorted(newly)

    return CascadeOutcome(active=frozenset(active), informed=frozenset(reached - active))


def simulate_lt(g: DirectedGraph, seeds: Iterable[int], stream: ReplicationStream) -> CascadeOutcome:
    """
    Linear threshold. Node thresholds are 1 - u with u the node's uniform draw,
    i.e. uniform on (0, 1]; a node activates once the lt_weight arriving from
    active in-neighbours reaches its threshold.
    """
    seeds = check_seeds(g, seeds)
    if not seeds:
        return _EMPTY

    thresholds = (1.0 - stream.uniforms(g.n)).tolist()
    weights = g.lt_list
    out_edges = g.out_edges

    active = set(seeds)
    reached = set()
    pressure = {}
    frontier = list(seeds)
    while frontier:
        newly = []
        for u in frontier:
            for v, e in out_edges[u]:
                reached.add(v)
                if v in active:
                    continue
                total = pressure.get(v, 0.0) + weights[e]
                pressure[v] = total
                if total >= thresholds[v]:
                    active.add(v)
                    newly.append(v)
        frontier = sorted(newly)

    return CascadeOutcome(active=frozenset(active), informed=frozenset(reached - active))


def simulate(g: DirectedGraph, seeds: Iterable[int], model, stream: ReplicationStream) -> CascadeOutcome:
    if parse_model(model) is Model.IC:
        return simulate_ic(g, seeds, stream)
    return simulate_lt(g, seeds, stream)
