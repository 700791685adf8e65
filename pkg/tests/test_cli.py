# tests/test_cli.py

import json

import pytest
from typer.testing import CliRunner

from cli import app
from hamspec.graphs import graph6_decode
from hamspec.hamilton import has_hamilton_path

runner = CliRunner()


def test_rho_json():
    result = runner.invoke(app, ["rho", "--family", "G2:7", "--output", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert abs(data["value"] - 4.4040) < 1e-4
    assert data["width"] <= 1e-10


def test_rho_reads_graph6_from_stdin():
    result = runner.invoke(app, ["rho", "--output", "json"], input="A_\nBw\n")
    assert result.exit_code == 0
    values = [row["value"] for row in json.loads(result.stdout)]
    assert values == [1.0, 2.0]


def test_rho_with_tol_override(monkeypatch):
    monkeypatch.setenv("HAMSPEC_TOL", "1e-10")
    result = runner.invoke(app, ["rho", "--family", "K2,5", "--tol", "1e-6", "--output", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["width"] <= 1e-6


def test_rho_csv():
    result = runner.invoke(app, ["rho", "--output", "csv"], input="A_\nBw\n")
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "graph,n,m,value,lower,upper,iterations"
    assert len(lines) == 3
    assert [float(line.split(",")[3]) for line in lines[1:]] == [1.0, 2.0]


@pytest.mark.parametrize("command", [["ham", "--family", "K4"], ["verify", "--check", "fn_cycle", "--n", "5"]])
def test_csv_is_rejected_where_unsupported(command):
    result = runner.invoke(app, [*command, "--output", "csv"])
    assert result.exit_code == 2


def test_ham_reports_missing_path():
    result = runner.invoke(app, ["ham", "--family", "join(K2,4K1)", "--path"])
    assert result.exit_code == 0
    assert "no Hamilton path" in result.stdout


def test_ham_json_witness():
    result = runner.invoke(app, ["ham", "--graph6", "Bw", "--cycle", "--output", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["cycle"]["found"] is True
    assert sorted(data["cycle"]["order"]) == [0, 1, 2]


@pytest.mark.parametrize(
    "args",
    [
        ["rho", "--family", "join(K2,foo)"],
        ["rho", "--graph6", ">>graph6<<A_"],
        ["rho"],
        ["verify", "--check", "nonsense", "--n", "5"],
        ["verify", "--check", "theorem1", "--n", "3"],
        ["verify", "--check", "theorem1", "--n", "5", "--jobs", "0"],
    ],
)
def test_usage_errors_exit_2(args):
    assert runner.invoke(app, args).exit_code == 2


def test_long_running_order_exits_3():
    result = runner.invoke(app, ["verify", "--check", "theorem1", "--n", "8"])
    assert result.exit_code == 3


def test_verify_json_without_timing():
    args = ["verify", "--check", "lemmaG2", "--n", "6", "--jobs", "1", "--output", "json", "--no-timing"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0
    data = json.loads(first.stdout)
    assert data["verdict"] == "PASS"
    assert "elapsed_ms" not in data
    assert first.stdout == second.stdout


def test_verify_lemma_g2_n7_json():
    result = runner.invoke(
        app, ["verify", "--check", "lemmaG2", "--n", "7", "--jobs", "1", "--output", "json"]
    )
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["verdict"] == "PASS"
    assert len(data["exceptions"]) == 4


@pytest.mark.slow
def test_parallel_scan_matches_serial():
    base = ["verify", "--check", "lemmaG2", "--n", "7", "--output", "json", "--no-timing"]
    serial = runner.invoke(app, base + ["--jobs", "1"])
    parallel = runner.invoke(app, base + ["--jobs", "4"])
    assert serial.exit_code == parallel.exit_code == 0
    assert serial.stdout == parallel.stdout


def test_verify_text_output():
    result = runner.invoke(app, ["verify", "--check", "fn_cycle", "--n", "5"])
    assert result.exit_code == 0
    assert "PASS" in result.stdout


def test_tables_csv():
    result = runner.invoke(app, ["tables", "--output", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "table,graph,printed_value,computed_value,abs_error"
    assert len(lines) == 25


def test_search_prints_non_traceable_graphs():
    result = runner.invoke(app, ["search", "--n", "5", "--min-degree", "1", "--no-path", "--limit", "50"])
    assert result.exit_code == 0
    lines = result.stdout.split()
    assert lines
    for line in lines:
        G = graph6_decode(line)
        assert G.min_degree >= 1
        assert not has_hamilton_path(G).found


def test_search_rho_filter():
    result = runner.invoke(app, ["search", "--n", "4", "--rho-min", "3"])
    assert result.exit_code == 0
    assert result.stdout.split() == ["C~"]


def test_families_and_config():
    assert runner.invoke(app, ["families", "--n", "7"]).exit_code == 0
    assert runner.invoke(app, ["config"]).exit_code == 0
