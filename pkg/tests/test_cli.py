import io
import json

import pandas as pd
import pytest

from graph.fixtures import overlap
from graph.generate import scale_free
from graph.store import assign_weights, load_graph, save_graph
from main.main import run_cli
from main.tools import algorithm_functions, all_algorithms


@pytest.fixture
def fixture_file(tmp_path):
    def _write(name: str) -> str:
        path = tmp_path / f"{name}.txt"
        assert run_cli(["generate", "--kind", "fixture", "--name", name, "--out", str(path)]) == 0
        return str(path)
    return _write


def _read_csv(path) -> pd.DataFrame:
    return pd.read_csv(path, keep_default_na=False)


def test_select_single_edge(fixture_file, tmp_path):
    out = tmp_path / "select.csv"
    code = run_cli([
        "select", "--graph", fixture_file("single-edge"), "--algo", "lazy-greedy", "--k", "1",
        "--evaluator", "exact", "--lambda", "1", "--out", str(out),
    ])
    assert code == 0
    row = _read_csv(out).iloc[0]
    assert row["seeds"] == "u"
    assert row["objective"] == pytest.approx(2.0)
    assert row["evaluations"] == 2


def test_select_rows_per_algorithm_and_k(fixture_file, tmp_path):
    out = tmp_path / "select.json"
    code = run_cli([
        "select", "--graph", fixture_file("two-stars"), "--algo", "lazy-greedy,effective-degree",
        "--k", "1,2", "--evaluator", "exact", "--format", "json", "--out", str(out),
    ])
    assert code == 0
    rows = json.loads(out.read_text())
    assert [(r["algorithm"], r["k"]) for r in rows] == [
        ("lazy-greedy", 1), ("lazy-greedy", 2), ("effective-degree", 1), ("effective-degree", 2),
    ]
    assert rows[1]["seeds"] == "c1;c2"
    assert rows[1]["objective"] == pytest.approx(7.0)


@pytest.mark.parametrize("argv, field", [
    (["--algo", "pagerank"], "algo"),
    (["--algo", ""], "algo"),
    (["--lambda", "1.5"], "lambda"),
    (["--k", "x"], "k"),
    (["--seed", "-1"], "seed"),
])
def test_invalid_input_exits_with_2(fixture_file, capsys, argv, field):
    code = run_cli(["select", "--graph", fixture_file("two-stars"), "--replications", "10", *argv])
    assert code == 2
    assert f"invalid field '{field}'" in capsys.readouterr().err


def test_missing_graph_exits_with_2(tmp_path, capsys):
    assert run_cli(["select", "--graph", str(tmp_path / "nope.txt")]) == 2
    assert "invalid field 'graph'" in capsys.readouterr().err


def test_evaluate_seed_files(fixture_file, tmp_path):
    graph = fixture_file("star3")
    empty = tmp_path / "empty.txt"
    empty.write_text("# nobody\n")
    centre = tmp_path / "centre.txt"
    centre.write_text("c\n")

    out = tmp_path / "eval.csv"
    assert run_cli(["evaluate", "--graph", graph, "--seeds", str(empty), "--replications", "50", "--out", str(out)]) == 0
    row = _read_csv(out).iloc[0]
    assert row["mean"] == 0.0 and row["std_error"] == 0.0

    assert run_cli(["evaluate", "--graph", graph, "--seeds", str(centre), "--replications", "50", "--out", str(out)]) == 0
    first = out.read_bytes()
    row = _read_csv(out).iloc[0]
    assert row["mean"] == 4.0 and row["std_error"] == 0.0
    assert row["active_mean"] == 1.0 and row["informed_mean"] == 3.0

    assert run_cli(["evaluate", "--graph", graph, "--seeds", str(centre), "--replications", "50", "--out", str(out)]) == 0
    assert out.read_bytes() == first


def test_evaluate_unknown_label(fixture_file, tmp_path, capsys):
    seeds = tmp_path / "seeds.txt"
    seeds.write_text("zz\n")
    assert run_cli(["evaluate", "--graph", fixture_file("star3"), "--seeds", str(seeds)]) == 2
    assert "unknown node label" in capsys.readouterr().err


def test_generate_is_reproducible(tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (first, second):
        assert run_cli([
            "generate", "--kind", "erdos-renyi", "--n", "40", "--p", "0.1", "--seed", "7",
            "--weights", "uniform:0.2", "--out", str(path),
        ]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert load_graph(first).ic_list == tuple([0.2] * load_graph(first).m)

    free = tmp_path / "sf.txt"
    assert run_cli(["generate", "--kind", "scale-free", "--n", "100", "--m0", "2", "--out", str(free)]) == 0
    assert load_graph(free).m == 196
    assert run_cli(["generate", "--kind", "scale-free", "--n", "100"]) == 2


def _benchmark(graph, out):
    return run_cli([
        "benchmark", "--graph", graph, "--algo", "lazy-greedy,effective-degree,out-degree,random",
        "--k", "1,2", "--replications", "200", "--seed", "3", "--no-timing", "--out", str(out),
    ])


def test_benchmark_is_byte_identical(tmp_path, monkeypatch):
    graph = tmp_path / "overlap.txt"
    save_graph(overlap(), graph)

    first, second, threaded = tmp_path / "one.csv", tmp_path / "two.csv", tmp_path / "three.csv"
    assert _benchmark(str(graph), first) == 0
    assert _benchmark(str(graph), second) == 0
    monkeypatch.setenv("ICM_THREADS", "3")
    assert _benchmark(str(graph), threaded) == 0

    assert first.read_bytes() == second.read_bytes() == threaded.read_bytes()
    summaries = [(tmp_path / f"{name}.summary.json").read_bytes() for name in ("one", "two", "three")]
    assert summaries[0] == summaries[1] == summaries[2]

    summary = json.loads(summaries[0])
    assert summary["config"]["heldout_seed"] == 4
    assert summary["graph"]["n"] == 10
    assert len(summary["graph"]["content_hash"]) == 40
    assert len(summary["rows"]) == 8


def test_benchmark_greedy_dominates_baselines(tmp_path):
    graph = tmp_path / "sf.txt"
    save_graph(assign_weights(scale_free(8, 2, seed=5), "uniform-ic", p=0.3), graph)
    out = tmp_path / "bench.csv"
    code = run_cli([
        "benchmark", "--graph", str(graph), "--algo", "lazy-greedy,effective-degree,out-degree,random",
        "--k", "1", "--evaluator", "exact", "--replications", "2000", "--out", str(out),
    ])
    assert code == 0
    table = _read_csv(out).set_index("algorithm")
    greedy = table.loc["lazy-greedy"]
    for name in ("effective-degree", "out-degree", "random"):
        other = table.loc[name]
        slack = 4 * (greedy["std_error"] ** 2 + other["std_error"] ** 2) ** 0.5
        assert greedy["objective"] >= other["objective"] - slack


def test_stdout_output(capsys):
    assert run_cli(["generate", "--kind", "fixture", "--name", "single-edge"]) == 0
    text = capsys.readouterr().out
    assert load_graph(io.StringIO(text)).labels == ("u", "v")


def test_select_and_evaluate_ignore_thread_count(fixture_file, tmp_path, monkeypatch):
    graph = fixture_file("overlap")
    seeds = tmp_path / "seeds.txt"
    seeds.write_text("a b\n")
    outputs = []
    for threads in ("1", "1", "4"):
        monkeypatch.setenv("ICM_THREADS", threads)
        select_out = tmp_path / f"select{len(outputs)}.csv"
        eval_out = tmp_path / f"eval{len(outputs)}.csv"
        assert run_cli([
            "select", "--graph", graph, "--algo", "lazy-greedy,random", "--k", "2",
            "--replications", "100", "--no-timing", "--out", str(select_out),
        ]) == 0
        assert run_cli([
            "evaluate", "--graph", graph, "--seeds", str(seeds), "--replications", "300", "--out", str(eval_out),
        ]) == 0
        outputs.append((select_out.read_bytes(), eval_out.read_bytes()))
    assert outputs[0] == outputs[1] == outputs[2]


def test_algo_help_lists_every_algorithm(capsys, monkeypatch):
    monkeypatch.setenv("COLUMNS", "10000")
    with pytest.raises(SystemExit):
        run_cli(["select", "--help"])
    text = capsys.readouterr().out
    for entry in all_algorithms:
        assert f"{entry['name']}: {entry['description']}" in text
    assert set(algorithm_functions) == {entry["name"] for entry in all_algorithms}
