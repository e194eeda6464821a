"""CLI surface: exit codes, file formats, and report determinism."""

import json

import pytest

from minor_ramsey import cli, ramsey
from minor_ramsey import graph as gr


def run(capsys, *argv) -> tuple[int, str]:
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def petersen_file(tmp_path, petersen):
    path = tmp_path / "petersen.g6"
    path.write_text(gr.write_graph6(petersen) + "\n")
    return str(path)


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.edges"
    path.write_text(gr.write_edge_list(gr.complete(5)))
    return str(path)


# ---------------------------------------------------------------------------
# minor / hadwiger

def test_minor_found(capsys, petersen_file, k5_file, petersen):
    code, out = run(capsys, "minor", "--host", petersen_file,
                    "--target", k5_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "found"
    assert len(payload["model"]) == 5


def test_minor_absent(capsys, tmp_path, petersen_file):
    k6 = tmp_path / "k6.g6"
    k6.write_text(gr.write_graph6(gr.complete(6)) + "\n")
    code, out = run(capsys, "minor", "--host", petersen_file,
                    "--target", str(k6))
    assert code == 0 and out.strip() == "none"


def test_minor_budget_exhausted_exit_code(capsys, petersen_file, k5_file):
    code, out = run(capsys, "minor", "--host", petersen_file,
                    "--target", k5_file, "--budget", "1")
    assert code == 3 and out.strip() == "indeterminate"


def test_minor_missing_file_is_usage_error(capsys, k5_file):
    code, _ = run(capsys, "minor", "--host", "/nonexistent", "--target", k5_file)
    assert code == 2


def test_hadwiger_exact(capsys, petersen_file):
    code, out = run(capsys, "hadwiger", "--graph", petersen_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 5 and payload["exact"] is True


def test_hadwiger_heuristic(capsys, petersen_file):
    code, out = run(capsys, "hadwiger", "--graph", petersen_file,
                    "--heuristic", "--seed", "1", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["exact"] is False and payload["value"] <= 5


# ---------------------------------------------------------------------------
# gamma

def test_gamma_solver(capsys, tmp_path):
    path = tmp_path / "k5.g6"
    path.write_text(gr.write_graph6(gr.complete(5)) + "\n")
    code, out = run(capsys, "gamma", "--graph", str(path))
    payload = json.loads(out)
    assert code == 0
    assert payload["method"] == "solver"
    assert payload["constraint_value"] <= 5 + 1e-12
    assert 0 < payload["value"] <= 0.6563


# ---------------------------------------------------------------------------
# ramsey / construct / verify-coloring

def test_ramsey_forced_and_counterexample(capsys, tmp_path):
    code, out = run(capsys, "ramsey", "--k", "3", "--ell", "2", "--n", "5")
    assert code == 0 and json.loads(out)["outcome"] == "all_colorings_forced"

    cex = tmp_path / "cex.txt"
    code, out = run(capsys, "ramsey", "--k", "3", "--ell", "2", "--n", "4",
                    "--out", str(cex))
    assert code == 1 and json.loads(out)["outcome"] == "counterexample"

    code, _ = run(capsys, "verify-coloring", "--coloring", str(cex), "--k", "3")
    assert code == 0


def test_verify_coloring_refuted(capsys, tmp_path):
    bad = tmp_path / "all_red.txt"
    bad.write_text(ramsey.write_coloring(
        ramsey.coloring_from_red(gr.complete(5))))
    code, out = run(capsys, "verify-coloring", "--coloring", str(bad),
                    "--k", "3", "--json")
    assert code == 1 and json.loads(out)["verified"] is False


def test_construct_walecki_verifies(capsys, tmp_path):
    out_file = tmp_path / "w3.txt"
    code, _ = run(capsys, "construct", "--kind", "walecki", "--param", "3",
                  "--out", str(out_file))
    assert code == 0
    parsed = ramsey.parse_coloring(out_file.read_text())
    assert parsed == ramsey.walecki(3)


def test_construct_missing_param_is_usage_error(capsys):
    code, _ = run(capsys, "construct", "--kind", "two_cliques")
    assert code == 2


# ---------------------------------------------------------------------------
# experiments

def test_experiment_determinism_across_worker_counts(capsys, tmp_path):
    dir_a, dir_b = tmp_path / "a", tmp_path / "b"
    code, out = run(capsys, "--workers", "1", "experiment", "--name", "star",
                    "--seed", "5", "--trials", "20", "--k-values", "12",
                    "--out-dir", str(dir_a))
    assert code == 0
    paths_a = json.loads(out)
    code, out = run(capsys, "--workers", "8", "experiment", "--name", "star",
                    "--seed", "5", "--trials", "20", "--k-values", "12",
                    "--out-dir", str(dir_b))
    assert code == 0
    paths_b = json.loads(out)
    for key in ("csv", "json"):
        with open(paths_a[key]) as fa, open(paths_b[key]) as fb:
            assert fa.read() == fb.read()


def test_experiment_bce(capsys, tmp_path):
    code, out = run(capsys, "experiment", "--name", "bce", "--seed", "2",
                    "--trials", "5", "--n-values", "8", "--out-dir", str(tmp_path))
    assert code == 0
    csv_lines = open(json.loads(out)["csv"]).read().splitlines()
    assert csv_lines[0] == "n,mean_h,std_h,bce_curve,ratio"
    assert len(csv_lines) == 2


# ---------------------------------------------------------------------------
# find-mono / repro

def test_find_mono(capsys, tmp_path):
    coloring = tmp_path / "mono.txt"
    coloring.write_text(ramsey.write_coloring(
        ramsey.coloring_from_red(gr.complete(8))))
    target = tmp_path / "k4.g6"
    target.write_text(gr.write_graph6(gr.complete(4)) + "\n")
    code, out = run(capsys, "find-mono", "--coloring", str(coloring),
                    "--target", str(target), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["color"] == 0 and len(payload["model"]) == 4


def test_repro_filtered(capsys):
    code, out = run(capsys, "repro", "--only", "06")
    assert code == 0
    assert out.splitlines()[-1] == "result: PASS"


# ---------------------------------------------------------------------------
# graph file autodetection

def test_load_graph_autodetect(tmp_path):
    g6 = tmp_path / "g.txt"
    g6.write_text(gr.write_graph6(gr.cycle(5)) + "\n")
    assert cli.load_graph(str(g6)) == gr.cycle(5)
    edges = tmp_path / "e.txt"
    edges.write_text("# comment\n" + gr.write_edge_list(gr.cycle(5)))
    assert cli.load_graph(str(edges)) == gr.cycle(5)
    empty = tmp_path / "empty.txt"
    empty.write_text("\n")
    with pytest.raises(ValueError):
        cli.load_graph(str(empty))
