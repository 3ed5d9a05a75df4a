"""Command-line surface: verbs, formats, exit codes, determinism."""

import json

import pytest

from ringgraphs.analysis import graph_equals
from ringgraphs.cli import main
from ringgraphs.export import graph_to_dot, graph_to_json, load_graph_json
from ringgraphs.graphs import build_level
from ringgraphs.ideals import zero_ideal
from ringgraphs.rings import build_ring


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_dot_z12_level2(capsys):
    code, out, _ = run_cli(
        capsys, "build", "--ring", "Z12", "--ideal", "0", "--i", "2", "--format", "dot"
    )
    assert code == 0
    node_lines = [l for l in out.splitlines() if '";' in l and "--" not in l]
    edge_lines = [l for l in out.splitlines() if "--" in l]
    assert len(node_lines) == 7
    assert len(edge_lines) == 12
    assert out.startswith("graph g_cozero_2 {")


def test_stabilize_z24_prints_3(capsys):
    code, out, _ = run_cli(capsys, "stabilize", "--ring", "Z24", "--ideal", "0")
    assert code == 0
    assert out.strip() == "3"


def test_build_json_z9(capsys):
    code, out, _ = run_cli(
        capsys, "build", "--ring", "Z9", "--ideal", "0", "--i", "5", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["vertices"] == ["3", "6"]
    assert data["edges"] == []


def test_json_round_trip(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, _, _ = run_cli(
        capsys, "build", "--ring", "Z24", "--i", "2", "--format", "json",
        "--out", str(path),
    )
    assert code == 0
    loaded = load_graph_json(path.read_text(encoding="utf-8"))
    ring = build_ring("Z24")
    built = build_level(ring, zero_ideal(ring), 2)
    assert graph_equals(loaded, built)


def test_dot_and_json_enumerate_identically():
    ring = build_ring("Z24")
    g = build_level(ring, zero_ideal(ring), 2)
    data = json.loads(graph_to_json(g))
    dot = graph_to_dot(g)
    dot_nodes = [
        line.strip().strip(';').strip('"')
        for line in dot.splitlines()
        if '";' in line and "--" not in line
    ]
    dot_edges = [
        [p.strip().strip('"') for p in line.strip().strip(";").split("--")]
        for line in dot.splitlines()
        if "--" in line
    ]
    assert dot_nodes == data["vertices"]
    assert dot_edges == data["edges"]


def test_extended_level_flag(capsys):
    code, out, _ = run_cli(
        capsys, "build", "--ring", "Z12", "--i", "ext", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["i"] == "extended"
    assert len(data["edges"]) == 12


def test_zdg_verb(capsys):
    code, out, _ = run_cli(
        capsys, "zdg", "--ring", "Z6", "--i", "1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "zero"
    assert data["vertices"] == ["2", "3", "4"]
    assert data["edges"] == [["2", "3"], ["3", "4"]]


def test_radical_verb(capsys):
    code, out, _ = run_cli(capsys, "radical", "--ring", "Z12")
    assert code == 0 and out.strip() == "0,6"
    code, out, _ = run_cli(capsys, "radical", "--ring", "Z12", "--format", "json")
    assert json.loads(out)["elements"] == ["0", "6"]


def test_xi_verb(capsys):
    code, out, _ = run_cli(capsys, "xi", "--ring", "Z6", "--ideal", "0")
    assert code == 0
    assert out.strip().splitlines()[-1] == "xi(R) = 1"
    code, out, _ = run_cli(capsys, "xi", "--ring", "Z5", "--format", "json")
    assert json.loads(out)["xi"] is None


def test_analyze_verb(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--ring", "Z12", "--i", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["is_complete"] is False
    assert data["complete_multipartite_parts"] == [["2", "4", "8", "10"], ["3", "6", "9"]]
    assert data["valuation_partition"]["holds"] is False
    assert data["valuation_partition"]["witness"] == ["3", "6"]


def test_exit_code_on_bad_grammar(capsys):
    code, _, err = run_cli(capsys, "build", "--ring", "Zoops")
    assert code == 2
    assert "error" in err


def test_exit_code_on_carrier_cap(capsys):
    code, _, err = run_cli(capsys, "build", "--ring", "Z70000")
    assert code == 2


def test_exit_code_on_unknown_flag(capsys):
    assert main(["build", "--ring", "Z12", "--nope"]) == 2


def test_exit_code_on_bad_level(capsys):
    code, _, err = run_cli(capsys, "build", "--ring", "Z12", "--i", "0")
    assert code == 2


def test_verify_grid_file_and_exit_codes(tmp_path, capsys):
    ok_grid = [
        {"claim": "C-EMPTY", "ring": "Z27", "ideal": "0", "params": {"i": 4},
         "expected": "VERIFIED"},
        {"claim": "C-TRI", "ring": "Z12", "ideal": "0",
         "params": {"i": 2, "p": 2, "q": 3, "n": 2}, "expected": "REFUTED"},
    ]
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(ok_grid), encoding="utf-8")
    code, out, _ = run_cli(capsys, "verify", "--grid", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["mismatches"] == 0

    bad_grid = [dict(ok_grid[1], expected="VERIFIED")]
    path.write_text(json.dumps(bad_grid), encoding="utf-8")
    code, out, _ = run_cli(capsys, "verify", "--grid", str(path))
    assert code == 1
    assert json.loads(out)["mismatches"] == 1


def test_verify_table_format(tmp_path, capsys):
    grid = [
        {"claim": "C-BIP", "ring": "Z6", "ideal": "0", "params": {"i": 1},
         "expected": "VERIFIED"},
    ]
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid), encoding="utf-8")
    code, out, _ = run_cli(capsys, "verify", "--grid", str(path), "--format", "table")
    assert code == 0
    assert "C-BIP: VERIFIED=1" in out


def test_export_verb_round_trip(tmp_path, capsys):
    src = tmp_path / "g.json"
    code, _, _ = run_cli(
        capsys, "build", "--ring", "Z12", "--i", "2", "--format", "json",
        "--out", str(src),
    )
    assert code == 0
    code, out, _ = run_cli(capsys, "export", "--in", str(src), "--format", "dot")
    assert code == 0
    direct_code, direct_out, _ = run_cli(
        capsys, "build", "--ring", "Z12", "--i", "2", "--format", "dot"
    )
    assert out == direct_out


def test_build_outputs_are_deterministic(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run_cli(
            capsys, "build", "--ring", "Z36", "--i", "3", "--format", "json"
        )
        outs.add(out)
    assert len(outs) == 1


def test_missing_grid_file(capsys):
    code, _, err = run_cli(capsys, "verify", "--grid", "/nonexistent/grid.json")
    assert code == 2
