import json

import pytest

from moricensus.cli import main

GRAPH_TEXT = """\
node p0 label=0
node p1 label=1
node p2 label=2
edge p0 p1 label=-6
edge p1 p2 label=0
edge p2 p0 label=3
"""


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "seed.graph"
    path.write_text(GRAPH_TEXT, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_census_table(capsys):
    code, out, _ = run(capsys, "census")
    assert code == 0
    assert "3398" in out
    assert "2657" in out
    assert "741" in out


def test_census_json_keys(capsys):
    code, out, _ = run(capsys, "census", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["p_models"] == 450
    assert payload["t_models"] == 129
    assert payload["p_cones"] == 2657
    assert payload["t_cones"] == 741
    assert payload["total_cones"] == 3398
    assert len(payload["p_symmetric"]) == 13
    first = payload["p_symmetric"][0]
    assert set(first) == {"source", "family", "triple", "orbit_length",
                          "symmetry_order"}
    assert payload["findings"]


def test_census_csv(capsys):
    code, out, _ = run(capsys, "census", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "metric,value"
    assert "total_cones,3398" in lines


def test_verify_default_inputs_exit_zero(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "exit status: 0" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["exit_status"] == 0
    names = {v["name"] for v in payload["verdicts"]}
    assert "census.total_cones" in names
    assert "t_cones_proof_display" in names
    assert all(v["as_expected"] for v in payload["verdicts"])


def test_verify_with_wrong_symmetric_count(tmp_path, capsys):
    config = tmp_path / "declared.cfg"
    config.write_text(
        "entry t_models: count=129 breakdown=83+1+45\n"
        "entry t_symmetric: count=10\n"
        "entry p_very_degenerate: count=103 breakdown=71+7+25\n"
        "entry p_very_degenerate_symmetric: count=1\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "verify", "--config", str(config), "--format", "json")
    assert code == 1
    payload = json.loads(out)
    by_name = {v["name"]: v for v in payload["verdicts"]}
    assert by_name["census.t_cones"]["lhs"] == 744
    assert not by_name["census.t_cones"]["as_expected"]


def test_verify_bad_config_is_input_error(tmp_path, capsys):
    config = tmp_path / "declared.cfg"
    config.write_text("entry bad: count=10 breakdown=5+4\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", "--config", str(config))
    assert code == 2
    assert "breakdown" in err


def test_orbits_table(capsys):
    code, out, _ = run(capsys, "orbits", "0", "--", "-1", "1")
    assert code == 0
    assert "orbit length     : 3" in out
    assert "stabilizer order : 2" in out


def test_orbits_json(capsys):
    code, out, _ = run(capsys, "orbits", "--format", "json", "1", "1", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["orbit_length"] == 2
    assert payload["stabilizer_order"] == 3
    assert payload["canonical"] == [-1, -1, -1]
    assert sorted(payload["orbit"]) == [[-1, -1, -1], [1, 1, 1]]


def test_orbits_csv(capsys):
    code, out, _ = run(capsys, "orbits", "--format", "csv", "1", "2", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "element,a,b,c"
    assert len(lines) == 7


def test_orbits_out_of_range_is_input_error(capsys):
    code, _, err = run(capsys, "orbits", "2000000", "0", "0")
    assert code == 2
    assert "guarded range" in err


def test_closure_table(graph_file, capsys):
    code, out, _ = run(capsys, "closure", "--graph", graph_file,
                       "--moves", "triple_group")
    assert code == 0
    assert "class count     : 6" in out


def test_closure_json(graph_file, capsys):
    code, out, _ = run(capsys, "closure", "--graph", graph_file,
                       "--moves", "triple_group", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["class_count"] == 6
    assert payload["moves"] == "triple_group"
    assert payload["backend"] in ("compiled", "pure")


def test_closure_no_moves(graph_file, capsys):
    code, out, _ = run(capsys, "closure", "--graph", graph_file,
                       "--moves", "none", "--format", "csv")
    assert code == 0
    assert "class_count,1" in out


def test_closure_unknown_move_set(graph_file, capsys):
    code, _, err = run(capsys, "closure", "--graph", graph_file,
                       "--moves", "flops")
    assert code == 2
    assert "unknown move set" in err


def test_closure_missing_graph_file(capsys):
    code, _, err = run(capsys, "closure", "--graph", "/nonexistent.graph",
                       "--moves", "none")
    assert code == 2


def test_closure_budget_exhaustion_is_verification_failure(graph_file, capsys):
    code, _, err = run(capsys, "closure", "--graph", graph_file,
                       "--moves", "triple_group", "--max-classes", "2")
    assert code == 1
    assert "budget" in err


def test_audit_default_claims(capsys):
    code, out, _ = run(capsys, "audit")
    assert code == 0
    assert "t_cones_proof_display" in out
    assert "741 != 747" in out


def test_audit_custom_claims_unexpected_failure(tmp_path, capsys):
    claims = tmp_path / "claims.txt"
    claims.write_text("claim wrong: 1 + 1 == 3 expect=holds\n", encoding="utf-8")
    code, out, _ = run(capsys, "audit", "--claims", str(claims))
    assert code == 1
    assert "UNEXPECTED" in out


def test_audit_parse_error_reports_location(tmp_path, capsys):
    claims = tmp_path / "claims.txt"
    claims.write_text("claim broken: 1 + == 2 expect=holds\n", encoding="utf-8")
    code, _, err = run(capsys, "audit", "--claims", str(claims))
    assert code == 2
    assert "line 1" in err
