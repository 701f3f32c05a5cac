# Named tiny graphs with hand-checkable coverage values.
from typing import Callable, Dict

from graph.store import DirectedGraph


def single_edge(p: float = 0.5, lt_weight: float = 1.0) -> DirectedGraph:
    """u -> v. F({u}) = 2 for any p; W({u}) = 1 + p + (1 - p) * lambda."""
    return DirectedGraph(2, [0], [1], ic_prob=[p], lt_weight=[lt_weight], labels=["u", "v"])


def path3(p: float = 1.0) -> DirectedGraph:
    """a -> b -> c."""
    return DirectedGraph(3, [0, 1], [1, 2], ic_prob=[p, p], lt_weight=[1.0, 1.0], labels=["a", "b", "c"])


def star3(p: float = 0.0) -> DirectedGraph:
    """Centre c with three leaves."""
    return DirectedGraph(
        4, [0, 0, 0], [1, 2, 3],
        ic_prob=[p] * 3, lt_weight=[p] * 3,
        labels=["c", "l1", "l2", "l3"],
    )


def two_stars(p: float = 0.0) -> DirectedGraph:
    """Disjoint stars: c1 with three leaves, c2 with two."""
    return DirectedGraph(
        7, [0, 0, 0, 4, 4], [1, 2, 3, 5, 6],
        ic_prob=[p] * 5, lt_weight=[p] * 5,
        labels=["c1", "x1", "x2", "x3", "c2", "y1", "y2"],
    )


def overlap() -> DirectedGraph:
    """b -> {x, y, w, v}, a -> {x, y, z}, c -> {p, q}; degree ranking and effective degree disagree."""
    labels = ["a", "b", "c", "p", "q", "v", "w", "x", "y", "z"]
    ids = {label: i for i, label in enumerate(labels)}
    arcs = [
        ("a", "x"), ("a", "y"), ("a", "z"),
        ("b", "v"), ("b", "w"), ("b", "x"), ("b", "y"),
        ("c", "p"), ("c", "q"),
    ]
    return DirectedGraph(
        len(labels),
        [ids[a] for a, _ in arcs],
        [ids[b] for _, b in arcs],
        ic_prob=[0.1] * len(arcs),
        lt_weight=[0.5 if b in ("x", "y") else 1.0 for _, b in arcs],
        labels=labels,
    )


def lt_pair() -> DirectedGraph:
    """s1 -> v and s2 -> v, each with lt_weight 0.5."""
    return DirectedGraph(3, [0, 1], [2, 2], ic_prob=[0.5, 0.5], lt_weight=[0.5, 0.5], labels=["s1", "s2", "v"])


FIXTURES: Dict[str, Callable[[], DirectedGraph]] = {
    "single-edge": single_edge,
    "path3": path3,
    "star3": star3,
    "two-stars": two_stars,
    "overlap": overlap,
    "lt-pair": lt_pair,
}


def get_fixture(name: str) -> DirectedGraph:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return FIXTURES[name]()
