import time

import pytest

from graph.generate import scale_free
from selection.heuristics import effective_degree_rank

pytestmark = pytest.mark.slow


def _best_time(g, k, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        effective_degree_rank(g, k)
        best = min(best, time.perf_counter() - start)
    return best


def test_effective_degree_scales_linearly_in_arcs():
    m0 = 5
    times, sizes = [], []
    for arcs in (10_000, 20_000, 40_000):
        g = scale_free(arcs // m0 + m0, m0, seed=1)
        elapsed = _best_time(g, 50)
        assert elapsed < 1.0
        times.append(elapsed)
        sizes.append(g.m)
    # doubling the arcs may at most double the time, plus 60% slack; quadratic growth would quadruple it
    for i in (1, 2):
        assert sizes[i] == pytest.approx(2 * sizes[i - 1], rel=0.01)
        assert times[i] / times[i - 1] <= 2 * 1.6
