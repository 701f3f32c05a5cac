import pytest
from fastapi.testclient import TestClient

from api import app
from graph.fixtures import single_edge, two_stars
from graph.store import save_graph

client = TestClient(app)


def test_health():
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_evaluate_single_edge():
    response = client.post("/api/evaluate", json={
        "edges": save_graph(single_edge(p=0.5)),
        "seeds": ["u"],
        "lam": 1.0,
        "replications": 500,
    })
    assert response.status_code == 200
    body = response.json()
    assert body["mean"] == pytest.approx(2.0)
    assert body["std_error"] == 0.0
    assert body["replications"] == 500


def test_select_two_stars():
    response = client.post("/api/select", json={
        "edges": save_graph(two_stars()),
        "algorithm": "lazy-greedy",
        "evaluator": "exact",
        "k": 2,
    })
    assert response.status_code == 200
    body = response.json()
    assert body["seeds"] == ["c1", "c2"]
    assert body["marginal_gains"] == pytest.approx([4.0, 3.0])
    assert body["objective_value"] == pytest.approx(7.0)


@pytest.mark.parametrize("path, payload", [
    ("/api/select", {"algorithm": "pagerank", "k": 1}),
    ("/api/select", {"algorithm": "lazy-greedy", "k": 9}),
    ("/api/evaluate", {"seeds": ["nobody"]}),
])
def test_bad_requests_are_400(path, payload):
    response = client.post(path, json={"edges": save_graph(two_stars()), **payload})
    assert response.status_code == 400


def test_schema_violations_are_422():
    response = client.post("/api/evaluate", json={"edges": "0 1 0.5\n", "seeds": ["0"], "lam": 2.0})
    assert response.status_code == 422
