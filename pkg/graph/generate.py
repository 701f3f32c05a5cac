"""
Random graph generators for benchmark inputs.

networkx builds the topology; the result is converted into a DirectedGraph
with unset parameters (assign_weights fills them in).
"""

import logging

import networkx as nx

from graph.store import DirectedGraph, GraphFormatError

logger = logging.getLogger(__name__)


def _from_arcs(n: int, arcs) -> DirectedGraph:
    arcs = sorted(arcs)
    src = [u for u, _ in arcs]
    dst = [v for _, v in arcs]
    return DirectedGraph(n, src, dst)


def erdos_renyi(n: int, p: float, seed: int) -> DirectedGraph:
    """
    Directed G(n, p): every ordered pair (u, v), u != v, is an arc with
    probability p.

    Args:
        n: number of nodes
        p: arc probability in [0, 1]
        seed: random seed for reproducibility

    Returns:
        DirectedGraph without parameters
    """
    if n < 1:
        raise GraphFormatError(f"erdos-renyi needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphFormatError(f"erdos-renyi needs p in [0, 1], got {p}")

    G: nx.DiGraph = nx.gnp_random_graph(n, p, seed=seed, directed=True)
    arcs = [(int(u), int(v)) for u, v in G.edges() if u != v]
    logger.info("Generated erdos-renyi graph n=%d m=%d", n, len(arcs))
    return _from_arcs(n, arcs)


def scale_free(n: int, m0: int, seed: int) -> DirectedGraph:
    """
    Barabási–Albert preferential attachment graph with (n - m0) * m0 arcs.

    Each new node attaches to m0 existing nodes; the attachment is kept as a
    single arc from the older node to the newer one, so early hubs end up
    with large out-degree.

    Args:
        n: number of nodes
        m0: attachments per new node (1 <= m0 < n)
        seed: random seed for reproducibility
    """
    if m0 < 1 or m0 >= n:
        raise GraphFormatError(f"scale-free needs 1 <= m0 < n, got m0={m0}, n={n}")

    G: nx.Graph = nx.barabasi_albert_graph(n, m0, seed=seed)
    arcs = [(min(int(u), int(v)), max(int(u), int(v))) for u, v in G.edges()]
    logger.info("Generated scale-free graph n=%d m=%d", n, len(arcs))
    return _from_arcs(n, arcs)
