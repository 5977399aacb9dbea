import json
import os
import subprocess
import sys

import pytest

from golomb.cli import main
from golomb.fixtures import KNOWN_COUNTS_M3


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_golomb_count_single(capsys):
    code, out, _ = run_cli(capsys, "golomb-count", "--m", "3", "--t", "18", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"m": 3, "rows": [{"t": 18, "count": 98}]}


def test_golomb_count_range_text(capsys):
    code, out, _ = run_cli(capsys, "golomb-count", "--m", "1", "--t-min", "5", "--t-max", "7")
    assert code == 0
    assert out.splitlines() == ["5\t1", "6\t1", "7\t1"]


def test_golomb_count_csv(capsys):
    code, out, _ = run_cli(
        capsys, "golomb-count", "--m", "2", "--t-min", "3", "--t-max", "5", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,count"
    assert lines[1:] == ["3,2", "4,2", "5,4"]


def test_check_table1_passes(capsys):
    code, out, _ = run_cli(capsys, "golomb-count", "--check-table1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["check"]["ok"] is True
    assert {row["t"]: row["count"] for row in payload["rows"]} == KNOWN_COUNTS_M3


def test_check_table1_wrong_m_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "golomb-count", "--m", "4", "--check-table1")
    assert code == 1
    assert "m=3" in err


def test_json_output_reserializes_byte_for_byte(capsys):
    for argv in (
        ["golomb-count", "--m", "3", "--t-min", "6", "--t-max", "9", "--format", "json"],
        ["quasipoly", "--m", "2", "--format", "json"],
        ["regions", "--m", "3", "--list", "--format", "json"],
        ["reciprocity", "golomb", "--m", "2", "--t", "4", "--format", "json"],
        ["vertices", "--m", "3", "--format", "json"],
        ["mixed", "chroma", "--fixture", "triangle", "--t", "4", "--format", "json"],
    ):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_quasipoly_m3(capsys):
    code, out, _ = run_cli(capsys, "quasipoly", "--m", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["period_bound"] == 12
    assert payload["minimal_period"] == 12
    assert payload["leading_coefficient"] == "1/2"
    assert payload["value_at_zero"] == "10"
    assert payload["quasipolynomial"]["period"] == 12
    assert payload["quasipolynomial"]["constituents"][0] == ["10", "-4", "1/2"]


def test_quasipoly_m1(capsys):
    code, out, _ = run_cli(capsys, "quasipoly", "--m", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["quasipolynomial"] == {"period": 1, "constituents": [["1"]]}


def test_regions_counts(capsys):
    code, out, _ = run_cli(capsys, "regions", "--m", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"m": 3, "count": 10}
    code, out, _ = run_cli(capsys, "regions", "--m", "2", "--format", "json")
    assert json.loads(out)["count"] == 2


def test_reciprocity_golomb(capsys):
    code, out, _ = run_cli(
        capsys, "reciprocity", "golomb", "--m", "3", "--t", "0", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["rows"] == [{"t": 0, "lhs": "10", "rhs": 10, "ok": True}]


def test_reciprocity_mixed_fixture(capsys):
    code, out, _ = run_cli(
        capsys, "reciprocity", "mixed", "--fixture", "triangle", "--t", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["lhs"] == "30" and payload["rhs"] == 30 and payload["ok"] is True


def test_reciprocity_mixed_input_file(tmp_path, capsys):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 3], [2, 3]], "arcs": [[1, 2]]}))
    code, out, _ = run_cli(
        capsys, "reciprocity", "mixed", "--input", str(path), "--t", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["rhs"] == 12


def test_mixed_chroma(capsys):
    code, out, _ = run_cli(
        capsys, "mixed", "chroma", "--fixture", "triangle", "--t", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 12
    assert payload["polynomial"] == ["0", "1", "-3/2", "1/2"]


def test_mixed_orientations(tmp_path, capsys):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [1, 3], [2, 3]], "arcs": []}))
    code, out, _ = run_cli(capsys, "mixed", "orientations", "--input", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 6


def test_mixed_chromatic_number(capsys):
    code, out, _ = run_cli(
        capsys, "mixed", "chromatic-number", "--fixture", "triangle", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["chromatic_number"] == 3


def test_vertices_csv(capsys):
    code, out, _ = run_cli(capsys, "vertices", "--m", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "z1,z2,z3"
    assert len(lines) == 10
    assert "1/4,1/4,1/2" in lines


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(
        capsys, "regions", "--m", "2", "--format", "json", "--output", str(target)
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {"m": 2, "count": 2}


def test_exit_code_usage():
    assert main(["golomb-count"]) == 1  # missing --m/--t
    assert main(["no-such-command"]) == 1
    assert main(["reciprocity", "golomb", "--t", "1"]) == 1  # missing --m
    assert main(["mixed", "chroma"]) == 1  # no input or fixture


def test_exit_code_budget(capsys):
    code, _, err = run_cli(capsys, "golomb-count", "--m", "4", "--t", "30", "--budget", "10")
    assert code == 2
    assert "budget" in err


def test_exit_code_input_error_on_bad_graph_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "edges": [[1, 1]], "arcs": []}))
    assert main(["mixed", "chroma", "--input", str(path), "--t", "2"]) == 1


def test_csv_rejected_where_not_tabular():
    assert main(["regions", "--m", "2", "--format", "csv"]) == 1


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("GOLOMB_BUDGET", "10")
    code, _, err = run_cli(capsys, "golomb-count", "--m", "4", "--t", "30")
    assert code == 2
    monkeypatch.setenv("GOLOMB_BUDGET", "not-a-number")
    code, _, err = run_cli(capsys, "golomb-count", "--m", "1", "--t", "3")
    assert code == 1


def test_module_entry_point():
    env = dict(os.environ)
    src = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "golomb", "golomb-count", "--m", "3", "--t", "6", "--format", "json"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rows"] == [{"t": 6, "count": 2}]
