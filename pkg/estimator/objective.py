import logging
from typing import Iterable

from graph.store import DirectedGraph, require_parameters
from diffusion.outcome import parse_model
from estimator.exact import ExactOracle
from estimator.monte_carlo import CoverageConfig, estimate_coverage

logger = logging.getLogger(__name__)

EVALUATORS = ("monte-carlo", "exact")


class CoverageObjective:
    """
    W(S) as a callable for the seed selectors, counting evaluations.

    The Monte Carlo evaluator reuses cfg.master_seed for every call, so all
    seed sets are compared on the same replication streams.
    """

    def __init__(self, g: DirectedGraph, model, cfg: CoverageConfig, evaluator: str = "monte-carlo"):
        if evaluator not in EVALUATORS:
            raise ValueError(f"unknown evaluator {evaluator!r}; choose from {', '.join(EVALUATORS)}")
        self.graph = g
        self.model = parse_model(model)
        self.cfg = cfg
        self.evaluator = evaluator
        self.evaluations = 0
        require_parameters(g, self.model)
        self._oracle = ExactOracle(g, self.model) if evaluator == "exact" else None

    def __call__(self, seeds: Iterable[int]) -> float:
        seeds = list(seeds)
        self.evaluations += 1
        if self._oracle is not None:
            return self._oracle.coverage(seeds, self.cfg.lam)
        return estimate_coverage(self.graph, seeds, self.model, self.cfg).mean


def make_objective(g: DirectedGraph, model, cfg: CoverageConfig, evaluator: str = "monte-carlo") -> CoverageObjective:
    return CoverageObjective(g, model, cfg, evaluator)
