from collections import Counter

import numpy as np
import pytest

from graph.fixtures import single_edge
from graph.store import DirectedGraph
from diffusion.cascade import simulate
from diffusion.live_arc import reachable_size_distribution, sample_live_arc
from diffusion.outcome import Model, coverage_of_outcome
from diffusion.streams import ReplicationStream, replication_streams
from estimator.exact import live_arc_distribution


def test_certain_and_impossible_arcs(cyclic_graph):
    stream = ReplicationStream(0, 0)
    everything = sample_live_arc(cyclic_graph.with_parameters(ic_prob=[1.0] * 5), "ic", stream)
    nothing = sample_live_arc(cyclic_graph.with_parameters(ic_prob=[0.0] * 5), "ic", stream)
    assert everything.edge_count == 5
    assert sorted(everything.live_edges()) == sorted((u, v) for u, v, _, _ in cyclic_graph.edge_list())
    assert nothing.edge_count == 0
    assert nothing.reachable([0]) == {0}


def test_lt_keeps_each_in_arc_with_its_weight():
    g = DirectedGraph(3, [0, 1], [2, 2], ic_prob=[0.5, 0.5], lt_weight=[0.3, 0.2], labels=["a", "b", "v"])
    counts = Counter()
    for stream in replication_streams(17, 10_000):
        live = sample_live_arc(g, "lt", stream).live_edges()
        assert len(live) <= 1
        counts[live[0] if live else None] += 1
    assert counts[(0, 2)] == pytest.approx(3000, abs=150)
    assert counts[(1, 2)] == pytest.approx(2000, abs=150)
    assert counts[None] == pytest.approx(5000, abs=150)


def test_ic_live_arcs_agree_with_cascade_path_by_path(random_graphs):
    for g in random_graphs[:20]:
        for stream in replication_streams(8, 30):
            live = sample_live_arc(g, Model.IC, stream)
            assert live.outcome([0]) == simulate(g, [0], Model.IC, stream)


def test_live_arc_coverage():
    g = single_edge(p=1.0)
    live = sample_live_arc(g, "ic", ReplicationStream(0, 0))
    assert coverage_of_outcome(g, live, [0], 0.5) == 2.0
    assert coverage_of_outcome(g, live, [1], 0.5) == 1.0


def _exact_size_distribution(g, seeds, model):
    probabilities = np.zeros(g.n + 1)
    for probability, live in live_arc_distribution(g, model):
        probabilities[len(live.reachable(seeds))] += probability
    return probabilities


@pytest.mark.parametrize("model", list(Model))
def test_cascade_and_live_arc_distributions_agree(cyclic_graph, model):
    exact = _exact_size_distribution(cyclic_graph, [0], model)
    assert exact.sum() == pytest.approx(1.0)

    runs = 10_000
    cascade = np.zeros(cyclic_graph.n + 1)
    for stream in replication_streams(23, runs):
        cascade[len(simulate(cyclic_graph, [0], model, stream).active)] += 1
    sampled = reachable_size_distribution(cyclic_graph, [0], model, replication_streams(29, runs))

    np.testing.assert_allclose(cascade / runs, exact, atol=0.03)
    np.testing.assert_allclose(sampled / runs, exact, atol=0.03)
