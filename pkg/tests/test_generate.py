import pytest

from graph.fixtures import FIXTURES, get_fixture
from graph.generate import erdos_renyi, scale_free
from graph.store import GraphFormatError, require_parameters, save_graph


def test_erdos_renyi_is_deterministic_per_seed():
    assert save_graph(erdos_renyi(60, 0.05, seed=3)) == save_graph(erdos_renyi(60, 0.05, seed=3))
    assert save_graph(erdos_renyi(60, 0.05, seed=3)) != save_graph(erdos_renyi(60, 0.05, seed=4))


def test_erdos_renyi_extremes():
    assert erdos_renyi(5, 0.0, seed=1).m == 0
    assert erdos_renyi(5, 1.0, seed=1).m == 20


def test_scale_free_arc_count_and_orientation():
    g = scale_free(1000, 3, seed=7)
    assert g.n == 1000
    assert g.m == (1000 - 3) * 3
    assert all(u < v for u, v, _, _ in g.edge_list())


@pytest.mark.parametrize("kwargs", [
    dict(n=0, p=0.5),
    dict(n=5, p=1.5),
])
def test_erdos_renyi_rejects_bad_parameters(kwargs):
    with pytest.raises(GraphFormatError):
        erdos_renyi(seed=0, **kwargs)


def test_scale_free_rejects_bad_parameters():
    with pytest.raises(GraphFormatError):
        scale_free(5, 5, seed=0)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixtures_carry_both_models(name):
    g = get_fixture(name)
    require_parameters(g, "ic")
    require_parameters(g, "lt")


def test_unknown_fixture():
    with pytest.raises(ValueError, match="unknown fixture"):
        get_fixture("triangle")
