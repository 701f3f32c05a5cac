import networkx as nx
import pytest

from graph.fixtures import path3, single_edge
from graph.store import DirectedGraph, InvalidSeedError, ParameterError
from diffusion.cascade import simulate, simulate_ic, simulate_lt
from diffusion.outcome import CascadeOutcome, Model, coverage_of_outcome, informed_nodes, parse_model
from diffusion.streams import ReplicationStream, replication_streams


def _check_outcome(g, seeds, outcome):
    assert set(seeds) <= outcome.active
    assert not outcome.active & outcome.informed
    for v in outcome.informed:
        assert any(u in outcome.active for u, _ in g.in_edges[v])


@pytest.mark.parametrize("model", ["ic", "lt"])
def test_empty_seed_set_activates_nothing(edge_graph, model):
    outcome = simulate(edge_graph, [], model, ReplicationStream(0, 0))
    assert outcome.active == frozenset() and outcome.informed == frozenset()


def test_certain_arc_always_fires():
    g = single_edge(p=1.0)
    for stream in replication_streams(5, 50):
        outcome = simulate_ic(g, [0], stream)
        assert outcome.active == {0, 1}
        assert outcome.informed == frozenset()


def test_ic_edge_fires_with_its_probability(edge_graph):
    fired = 0
    for stream in replication_streams(1, 10_000):
        outcome = simulate_ic(edge_graph, [0], stream)
        assert 1 in outcome.active | outcome.informed
        fired += 1 in outcome.active
    assert fired / 10_000 == pytest.approx(0.5, abs=0.02)


def test_lt_full_weight_always_activates():
    g = path3()
    for stream in replication_streams(9, 200):
        assert simulate_lt(g, [0], stream).active == {0, 1, 2}


def test_lt_half_weight_activates_half_the_time(lt_pair_graph):
    hits = sum(2 in simulate_lt(lt_pair_graph, [0], s).active for s in replication_streams(2, 10_000))
    assert hits / 10_000 == pytest.approx(0.5, abs=0.02)
    for stream in replication_streams(2, 100):
        assert 2 in simulate_lt(lt_pair_graph, [0, 1], stream).active


@pytest.mark.parametrize("model", list(Model))
def test_outcome_depends_only_on_stream(cyclic_graph, model):
    streams = list(replication_streams(42, 100))
    forward = [simulate(cyclic_graph, [0], model, s) for s in streams]
    backward = [simulate(cyclic_graph, [0], model, s) for s in reversed(streams)]
    assert forward == backward[::-1]
    assert simulate(cyclic_graph, [0], model, ReplicationStream(42, 7)) == forward[7]


@pytest.mark.parametrize("model", list(Model))
def test_informed_set_matches_full_scan(random_graphs, model):
    for g in random_graphs:
        seeds = [0] if g.n < 4 else [0, g.n - 1]
        for stream in replication_streams(3, 20):
            outcome = simulate(g, seeds, model, stream)
            _check_outcome(g, seeds, outcome)
            assert outcome.informed == informed_nodes(g, outcome.active)
            assert len(seeds) <= outcome.coverage(0.5) <= g.n


def test_ic_with_certain_arcs_reaches_descendants(random_graphs):
    for g in random_graphs:
        certain = g.with_parameters(ic_prob=[1.0] * g.m)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(g.n))
        graph.add_edges_from((u, v) for u, v, _, _ in g.edge_list())
        outcome = simulate_ic(certain, [0], ReplicationStream(0, 0))
        assert outcome.active == nx.descendants(graph, 0) | {0}


def test_invalid_seeds_are_rejected(edge_graph):
    with pytest.raises(InvalidSeedError):
        simulate_ic(edge_graph, [2], ReplicationStream(0, 0))
    with pytest.raises(InvalidSeedError):
        simulate_ic(edge_graph, [0, 0], ReplicationStream(0, 0))
    with pytest.raises(ValueError):
        ReplicationStream(0, -1)


def test_parse_model():
    assert parse_model("lt") is Model.LT
    assert parse_model(Model.IC) is Model.IC
    with pytest.raises(ParameterError):
        parse_model("sir")


def test_coverage_of_outcome():
    g = DirectedGraph(5, [0, 0, 1], [2, 3, 4])
    assert coverage_of_outcome(g, CascadeOutcome(frozenset({0}), frozenset({1})), [0], 1.0) == 2.0
    assert coverage_of_outcome(g, CascadeOutcome(frozenset({0}), frozenset({1})), [0], 0.0) == 1.0
    both = CascadeOutcome(frozenset({0, 1}), frozenset({2, 3, 4}))
    assert coverage_of_outcome(g, both, [0, 1], 0.5) == 3.5
    with pytest.raises(ParameterError):
        coverage_of_outcome(g, both, [0, 1], 1.5)
