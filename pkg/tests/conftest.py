import numpy as np
import pytest

from graph.fixtures import lt_pair, overlap, single_edge, star3, two_stars
from graph.store import DirectedGraph, assign_weights


def random_graph(seed: int, min_n: int = 3, max_n: int = 7, max_m: int = 10) -> DirectedGraph:
    """
    Small random digraph carrying both parameters: ic_prob drawn from a mix
    of certain, impossible and fractional values, lt_weight normalized so
    every node's incoming sum stays below 1.
    """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(min_n, max_n + 1))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    m = int(rng.integers(1, min(max_m, len(pairs)) + 1))
    chosen = sorted(pairs[i] for i in rng.choice(len(pairs), size=m, replace=False))
    src = [u for u, _ in chosen]
    dst = [v for _, v in chosen]

    ic = rng.choice([0.0, 0.1, 0.3, 0.5, 0.8, 1.0], size=m).tolist()

    lt = [0.0] * m
    for v in range(n):
        arcs = [e for e, (_, b) in enumerate(chosen) if b == v]
        if not arcs:
            continue
        shares = rng.random(len(arcs) + 1)
        shares = shares / shares.sum()
        for e, share in zip(arcs, shares[:-1]):
            lt[e] = float(share)
    return DirectedGraph(n, src, dst, ic_prob=ic, lt_weight=lt)


SCHEMES = ("uniform-ic", "trivalency", "weighted-cascade")


def weighted_graph(seed: int, model: str) -> DirectedGraph:
    """
    Random digraph with up to 8 nodes and 12 arcs parameterized by a standard
    scheme. IC rotates through all three schemes by seed; LT always uses
    weighted-cascade, where every in-weight sum is exactly 1.
    """
    base = random_graph(seed, max_n=8, max_m=12)
    if model == "lt":
        return assign_weights(base, "weighted-cascade")
    scheme = SCHEMES[seed % 3]
    p = (0.1, 0.5, 0.9)[seed // 3 % 3]
    return assign_weights(base, scheme, p=p, seed=seed)


@pytest.fixture
def edge_graph():
    return single_edge(p=0.5)


@pytest.fixture
def star_graph():
    return star3(p=0.0)


@pytest.fixture
def stars_graph():
    return two_stars(p=0.0)


@pytest.fixture
def overlap_graph():
    return overlap()


@pytest.fixture
def lt_pair_graph():
    return lt_pair()


@pytest.fixture
def cyclic_graph():
    """0 -> 2 -> 3 -> 1 -> 2 with a shortcut 0 -> 3; valid for both models."""
    return DirectedGraph(
        4,
        [0, 1, 2, 0, 3],
        [2, 2, 3, 3, 1],
        ic_prob=[0.5, 0.3, 0.6, 0.4, 0.5],
        lt_weight=[0.5, 0.3, 0.6, 0.4, 0.5],
    )


@pytest.fixture
def random_graphs():
    return [random_graph(seed) for seed in range(50)]


@pytest.fixture
def weighted_graphs():
    return {model: [weighted_graph(seed, model) for seed in range(50)] for model in ("ic", "lt")}
