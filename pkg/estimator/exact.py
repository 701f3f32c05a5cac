"""
Exact coverage by weighted enumeration of live-arc graphs.

Computing W(S) is #P-hard in both models, so this oracle is capped and meant
for small instances: tests, the exhaustive baseline and greedy on toy graphs.
"""

import itertools
from collections import defaultdict
import logging
import math
from typing import Iterable, List, Tuple

from config import IC_EDGE_CAP, LT_CHOICE_CAP, LT_TOLERANCE
from graph.store import DirectedGraph, require_parameters
from diffusion.live_arc import LiveArcGraph
from diffusion.outcome import Model, check_lambda, check_seeds, parse_model

logger = logging.getLogger(__name__)


class EnumerationCapError(ValueError):
    """The instance needs more enumeration work than the configured cap."""

    def __init__(self, message: str, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"{message}: requires {required} terms, cap is {cap}")


def _ic_choices(g: DirectedGraph) -> List[List[Tuple[float, Tuple[int, ...]]]]:
    """Per uncertain arc: [(probability, live arcs), ...]; certain arcs fold into a base set."""
    choices = []
    for e, p in enumerate(g.ic_list):
        if p <= 0.0:
            continue
        if p >= 1.0:
            choices.append([(1.0, (e,))])
        else:
            choices.append([(p, (e,)), (1.0 - p, ())])
    return choices


def _lt_choices(g: DirectedGraph) -> List[List[Tuple[float, Tuple[int, ...]]]]:
    """Per node: the in-arc it keeps (or none) with its probability; zero-probability options dropped."""
    choices = []
    for v in range(g.n):
        options = []
        total = 0.0
        for _, e in g.in_edges[v]:
            w = g.lt_list[e]
            total += w
            if w > 0.0:
                options.append((w, (e,)))
        none = 1.0 - total
        if none > LT_TOLERANCE:
            options.append((none, ()))
        if options and not (len(options) == 1 and options[0][1] == ()):
            choices.append(options)
    return choices


def enumeration_size(g: DirectedGraph, model) -> int:
    """Number of live-arc graphs with positive probability the oracle visits."""
    model = parse_model(model)
    choices = _ic_choices(g) if model is Model.IC else _lt_choices(g)
    return math.prod(len(options) for options in choices)


def _check_cap(g: DirectedGraph, model: Model, cap: int = None) -> int:
    """Number of live-arc graphs the instance spans; raises when it exceeds the cap."""
    require_parameters(g, model)
    if model is Model.IC:
        uncertain = sum(1 for options in _ic_choices(g) if len(options) > 1)
        cap_terms = 2 ** (IC_EDGE_CAP if cap is None else cap)
        required = 2 ** uncertain
        if required > cap_terms:
            raise EnumerationCapError(f"{uncertain} uncertain arcs", required, cap_terms)
    else:
        cap_terms = LT_CHOICE_CAP if cap is None else cap
        required = enumeration_size(g, model)
        if required > cap_terms:
            raise EnumerationCapError("LT in-arc choices", required, cap_terms)
    return required


def live_arc_distribution(g: DirectedGraph, model, cap: int = None):
    """
    Yield (probability, LiveArcGraph) over every live-arc graph with positive
    probability.

    Raises:
        EnumerationCapError: when the number of terms exceeds the cap
    """
    model = parse_model(model)
    required = _check_cap(g, model, cap)
    choices = _ic_choices(g) if model is Model.IC else _lt_choices(g)

    logger.debug("Enumerating %d live-arc graphs (%s)", required, model.value)
    for combo in itertools.product(*choices):
        probability = 1.0
        live = [False] * g.m
        for p, arcs in combo:
            probability *= p
            for e in arcs:
                live[e] = True
        yield probability, LiveArcGraph(graph=g, model=model, live=tuple(live))


class ExactOracle:
    """
    Exact (E|A|, E|L|) per seed set, cached across queries (greedy and
    exhaustive search ask many times).

    Nothing is materialized up front. A query walks a decision tree that only
    branches on randomness the cascade actually reaches: under IC an arc is
    decided once its source is active and its target is not, under LT a node
    picks its in-arc once one of its in-neighbours is active. Undecided parts
    of the graph marginalize to 1, so each leaf stands for a whole class of
    live-arc graphs and memory stays proportional to the tree depth.
    """

    def __init__(self, g: DirectedGraph, model, cap: int = None):
        self.graph = g
        self.model = parse_model(model)
        self.required = _check_cap(g, self.model, cap)
        if self.model is Model.IC:
            self._options = [_arc_options(p) for p in g.ic_list]
        else:
            self._options = [_node_options(g, v) for v in range(g.n)]
        self._cache = {}

    def _propagate(self, active: set, decided: dict, newly: List[int]) -> List[int]:
        """Spread activation from the newly active nodes; return units that became undecided-but-relevant."""
        g = self.graph
        ic = self.model is Model.IC
        stack = list(newly)
        units = []
        while stack:
            u = stack.pop()
            for v, e in g.out_edges[u]:
                if v in active:
                    continue
                if ic:
                    units.append(e)
                elif v in decided:
                    if decided[v] == u:
                        active.add(v)
                        stack.append(v)
                else:
                    units.append(v)
        return units

    def _is_open(self, unit: int, active: set, decided: dict) -> bool:
        if self.model is Model.IC:
            return unit not in decided and int(self.graph.dst[unit]) not in active
        return unit not in decided and unit not in active

    def _apply(self, unit: int, choice, active: set) -> List[int]:
        if self.model is Model.IC:
            target = int(self.graph.dst[unit])
            if choice and target not in active:
                active.add(target)
                return [target]
            return []
        if choice in active:
            active.add(unit)
            return [unit]
        return []

    def outcomes(self, seeds: Iterable[int]):
        """Yield (probability, active set) over the leaves of the decision tree."""
        seeds = check_seeds(self.graph, seeds)
        active, decided = set(seeds), {}
        stack = [(1.0, active, decided, self._propagate(active, decided, list(seeds)))]
        while stack:
            probability, active, decided, pending = stack.pop()
            unit = None
            while pending:
                candidate = pending.pop()
                if self._is_open(candidate, active, decided):
                    unit = candidate
                    break
            if unit is None:
                yield probability, active
                continue
            for p, choice in self._options[unit]:
                branch_active = set(active)
                branch_decided = dict(decided)
                branch_decided[unit] = choice
                newly = self._apply(unit, choice, branch_active)
                more = self._propagate(branch_active, branch_decided, newly)
                stack.append((probability * p, branch_active, branch_decided, pending + more))

    def breakdown(self, seeds: Iterable[int]) -> Tuple[float, float]:
        """Exact (E|A|, E|L|) for the seed set."""
        seeds = check_seeds(self.graph, seeds)
        if not seeds:
            return 0.0, 0.0
        if seeds not in self._cache:
            # probability mass per (|A|, |L|) keeps the final sums short
            mass = defaultdict(float)
            out_edges = self.graph.out_edges
            for probability, active in self.outcomes(seeds):
                informed = {v for u in active for v, _ in out_edges[u] if v not in active}
                mass[len(active), len(informed)] += probability
            self._cache[seeds] = (
                math.fsum(p * a for (a, _), p in mass.items()),
                math.fsum(p * l for (_, l), p in mass.items()),
            )
        return self._cache[seeds]

    def coverage(self, seeds: Iterable[int], lam: float) -> float:
        lam = check_lambda(lam)
        active, informed = self.breakdown(seeds)
        return active + lam * informed


def _arc_options(p: float) -> List[Tuple[float, bool]]:
    if p <= 0.0:
        return [(1.0, False)]
    if p >= 1.0:
        return [(1.0, True)]
    return [(p, True), (1.0 - p, False)]


def _node_options(g: DirectedGraph, v: int) -> List[Tuple[float, int]]:
    """In-arc choices of v as (probability, source node); -1 is "none"."""
    options = []
    total = 0.0
    for u, e in g.in_edges[v]:
        w = g.lt_list[e]
        total += w
        if w > 0.0:
            options.append((w, u))
    none = 1.0 - total
    if none > LT_TOLERANCE or not options:
        options.append((max(none, 0.0) if options else 1.0, -1))
    return options


def exact_breakdown(g: DirectedGraph, seeds: Iterable[int], model, cap: int = None) -> Tuple[float, float]:
    """Exact (E|A|, E|L|) for the seed set."""
    if not check_seeds(g, seeds):
        return 0.0, 0.0
    return ExactOracle(g, model, cap).breakdown(seeds)


def exact_coverage(g: DirectedGraph, seeds: Iterable[int], model, lam: float, cap: int = None) -> float:
    """
    Exact W(S) = sum over live-arc graphs G_L of Prob(G_L) * (|R(S)| + lambda * |U(S)|).

    Args:
        cap: IC: maximum number of uncertain arcs (2**cap terms);
             LT: maximum product of per-node choices
    """
    lam = check_lambda(lam)
    active, informed = exact_breakdown(g, seeds, model, cap)
    return active + lam * informed
