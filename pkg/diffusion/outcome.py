from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Set, Tuple

from graph.store import DirectedGraph, InvalidSeedError, ParameterError


class Model(str, Enum):
    IC = "ic"
    LT = "lt"


def parse_model(value) -> Model:
    try:
        return Model(getattr(value, 'value', value))
    except ValueError:
        raise ParameterError(f"unknown diffusion model: {value!r}; choose ic or lt")


@dataclass(frozen=True)
class CascadeOutcome:
    """End state of one cascade: active set A and informed set L."""
    active: FrozenSet[int]
    informed: FrozenSet[int]

    def coverage(self, lam: float) -> float:
        return len(self.active) + lam * len(self.informed)


def check_seeds(g: DirectedGraph, seeds: Iterable[int]) -> Tuple[int, ...]:
    """Validate a seed set; returns it as a sorted tuple of ids."""
    seed_list = [int(s) for s in seeds]
    for s in seed_list:
        if not 0 <= s < g.n:
            raise InvalidSeedError(f"seed {s} outside [0, {g.n})")
    if len(set(seed_list)) != len(seed_list):
        raise InvalidSeedError("seed set contains duplicates")
    return tuple(sorted(seed_list))


def check_lambda(lam: float) -> float:
    if not 0.0 <= lam <= 1.0:
        raise ParameterError(f"lambda must be in [0, 1], got {lam}")
    return float(lam)


def informed_nodes(g: DirectedGraph, active: Set[int]) -> FrozenSet[int]:
    """Inactive nodes with an active in-neighbour, by a full scan of all arcs."""
    informed = set()
    for u, v, _, _ in g.edge_list():
        if u in active and v not in active:
            informed.add(v)
    return frozenset(informed)


def coverage_of_outcome(g: DirectedGraph, result, seeds: Iterable[int], lam: float) -> float:
    """
    |A| + lambda * |L| for a cascade outcome or a live-arc graph.

    For a live-arc graph, A is the set reachable from the seeds over live arcs
    and L the inactive out-neighbours of A over all arcs of g.
    """
    lam = check_lambda(lam)
    seeds = check_seeds(g, seeds)
    if hasattr(result, 'outcome'):
        result = result.outcome(seeds)
    return result.coverage(lam)
