"""End-to-end CLI runs through main(), checking exit codes and output."""

import json

import pytest

from matchperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_graph(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def c6_path(tmp_path):
    return write_graph(tmp_path, "c6.json", {
        "black": [0, 1, 2], "white": [3, 4, 5],
        "edges": [[0, 3], [1, 3], [1, 4], [2, 4], [2, 5], [0, 5]]})


def test_gen_writes_json(tmp_path, capsys):
    out = str(tmp_path / "cg2.json")
    code, stdout, _ = run(capsys, "gen", "cg", "2", "-o", out)
    assert code == 0
    data = json.loads(open(out).read())
    assert len(data["black"]) == 8 and len(data["white"]) == 8
    assert "canonical_matching" in data and "rotation" in data


def test_gen_unknown_family(capsys):
    code, _, err = run(capsys, "gen", "nosuch", "1")
    assert code == 2
    assert "unknown family" in err


def test_gen_bad_param(capsys):
    code, _, _ = run(capsys, "gen", "svmg", "0")
    assert code == 2


def test_count_c6(c6_path, capsys):
    code, stdout, _ = run(capsys, "count", c6_path)
    assert code == 0
    data = json.loads(stdout)
    assert data["count"] == "2"
    assert data["routing_report"]["braces"]


def test_count_route_dp(c6_path, capsys):
    code, stdout, _ = run(capsys, "count", c6_path, "--route", "dp")
    assert code == 0
    assert json.loads(stdout)["count"] == "2"


def test_count_no_pm_exits_zero(tmp_path, capsys):
    path = write_graph(tmp_path, "nopm.json",
                       {"black": [0], "white": [1], "edges": []})
    code, stdout, _ = run(capsys, "count", path)
    assert code == 0
    assert json.loads(stdout)["count"] == "0"


def test_count_weights(c6_path, tmp_path, capsys):
    wpath = tmp_path / "w.json"
    wpath.write_text(json.dumps({"0-3": 2, "1-3": 0, "1-4": 1, "2-4": 0,
                                 "2-5": 1, "0-5": 0}))
    code, stdout, _ = run(capsys, "count", c6_path, "--weights", str(wpath))
    assert code == 0
    data = json.loads(stdout)
    assert data["count"] == "2"
    assert len(data["polynomial"]) >= 1


def test_forced_route_infeasible_exit_3(tmp_path, capsys):
    k33 = write_graph(tmp_path, "k33.json", {
        "black": [0, 1, 2], "white": [3, 4, 5],
        "edges": [[b, w] for b in range(3) for w in range(3, 6)]})
    code, _, err = run(capsys, "count", k33, "--route", "pfaffian")
    assert code == 3
    assert "routing" in err


def test_resource_bound_exit_4(tmp_path, capsys):
    k33 = write_graph(tmp_path, "k33.json", {
        "black": [0, 1, 2], "white": [3, 4, 5],
        "edges": [[b, w] for b in range(3) for w in range(3, 6)]})
    code, _, err = run(capsys, "count", k33, "--route", "oracle",
                       "--oracle-bound", "4")
    assert code == 4
    assert "resource" in err


def test_analyze_c6(c6_path, capsys):
    code, stdout, _ = run(capsys, "analyze", c6_path)
    assert code == 0
    data = json.loads(stdout)
    assert data["matching_covered"] is True
    assert data["brace"] is False
    assert len(data["braces"]) == 2


def test_pmw_subcommand(c6_path, capsys):
    code, stdout, _ = run(capsys, "pmw", c6_path)
    assert code == 0
    data = json.loads(stdout)
    assert data["width"] == 2 and data["method"] == "exact"


def test_pfaffian_subcommand(tmp_path, capsys):
    c4 = write_graph(tmp_path, "c4.json", {
        "black": [0, 1], "white": [2, 3],
        "edges": [[0, 2], [0, 3], [1, 2], [1, 3]]})
    code, stdout, _ = run(capsys, "pfaffian", c4)
    assert code == 0
    data = json.loads(stdout)
    assert data["verdict"] == "pfaffian"
    assert "signs" in data


def test_minor_subcommand(tmp_path, capsys):
    k33 = write_graph(tmp_path, "k33.json", {
        "black": [0, 1, 2], "white": [3, 4, 5],
        "edges": [[b, w] for b in range(3) for w in range(3, 6)]})
    code, stdout, _ = run(capsys, "minor", k33, k33)
    assert code == 0
    assert json.loads(stdout)["contains"] is True


def test_decompose_subcommand(c6_path, capsys):
    code, stdout, _ = run(capsys, "decompose", c6_path)
    assert code == 0
    data = json.loads(stdout)
    assert len(data["braces"]) == 2


def test_gadget_subcommand(tmp_path, capsys):
    host = write_graph(tmp_path, "two_k2.json", {
        "black": [0, 1], "white": [2, 3], "edges": [[0, 2], [1, 3]]})
    cpath = tmp_path / "cross.json"
    cpath.write_text(json.dumps([[[0, 2], [1, 3]]]))
    code, stdout, _ = run(capsys, "gadget", host, "--crossings", str(cpath))
    assert code == 0
    data = json.loads(stdout)
    assert data["chi_weight_sum"] == "-1"
    assert data["signed_count"] == "-1"


def test_malformed_input_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _, _ = run(capsys, "count", str(path))
    assert code == 2


def test_missing_file_exit_2(capsys):
    code, _, _ = run(capsys, "count", "/nonexistent/g.json")
    assert code == 2


def test_deterministic_output(c6_path, capsys):
    code1, out1, _ = run(capsys, "count", c6_path, "--seed", "0")
    code2, out2, _ = run(capsys, "count", c6_path, "--seed", "0")
    assert code1 == code2 == 0
    assert out1 == out2
