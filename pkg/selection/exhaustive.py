import itertools
import logging
import math
import time

from config import SUBSET_CAP
from graph.store import DirectedGraph
from estimator.exact import EnumerationCapError, ExactOracle
from selection.greedy import check_budget
from selection.schema import SelectionResult
from utils import round_gain

logger = logging.getLogger(__name__)


def exhaustive_optimal(g: DirectedGraph, model, k: int, lam: float, cap: int = SUBSET_CAP) -> SelectionResult:
    """
    True argmax of W over all k-subsets using the exact oracle.

    Subsets are scanned in lexicographic order and only a strictly larger
    value replaces the incumbent, so ties resolve to the lexicographically
    smallest set.

    Raises:
        EnumerationCapError: C(n, k) above cap, or the graph above the oracle caps
    """
    start_time = time.perf_counter()
    k = check_budget(g, k)
    subsets = math.comb(g.n, k)
    if subsets > cap:
        raise EnumerationCapError(f"C({g.n}, {k}) subsets", subsets, cap)

    oracle = ExactOracle(g, model)
    best_set, best_key, best_value = (), None, 0.0
    for subset in itertools.combinations(range(g.n), k):
        value = oracle.coverage(subset, lam)
        key = round_gain(value)
        if best_key is None or key > best_key:
            best_set, best_key, best_value = subset, key, value
    logger.info("Exhaustive search over %d subsets: best %s = %.6f", subsets, best_set, best_value)

    # prefix gains along the (sorted) optimal set
    gains, previous = [], 0.0
    for i in range(1, len(best_set) + 1):
        value = oracle.coverage(best_set[:i], lam)
        gains.append(value - previous)
        previous = value

    return SelectionResult(
        algorithm="exhaustive",
        seeds=list(best_set),
        marginal_gains=gains,
        evaluations_per_step=([subsets] + [0] * (k - 1)) if k else [],
        objective_value=best_value,
        wall_time=time.perf_counter() - start_time,
    )
