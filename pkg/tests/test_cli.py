import json

import pytest

from sweepscope import cli, io
from sweepscope import orientedmatroid as om
from sweepscope import pointconfig as pc
from sweepscope import sweep as sw

from conftest import config, sweep


def run(argv, capsys):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(argv, capsys)
    return code, json.loads(out)


def test_sweeps_triangle(capsys):
    code, out = run_json(["sweeps", "triangle"], capsys)
    assert code == 0 and out["topes"] == 6 and out["covectors"] == 13


def test_bound(capsys):
    code, out = run(["bound", "--n", "4", "--rank", "3"], capsys)
    assert code == 0 and "24" in out


def test_pseudosweeps_cross(capsys):
    code, out = run_json(["pseudosweeps", "crosspolytope2", "--maximal-only"], capsys)
    assert code == 0 and out["count"] == 16


def test_table_flag_either_side(capsys):
    a = run(["--table", "pseudosweeps", "crosspolytope2", "--maximal-only"], capsys)
    b = run(["pseudosweeps", "crosspolytope2", "--maximal-only", "--table"], capsys)
    assert a == b and a[0] == 0
    assert not a[1].lstrip().startswith("{")


def test_deterministic(capsys):
    a = run(["bigom", "square"], capsys)
    b = run(["bigom", "square"], capsys)
    assert a == b


@pytest.mark.parametrize("cmd", [
    ["littleom", "square"], ["bigom", "square"], ["recognize-big", "square"],
    ["modular", "square", "--flat", "pairs"], ["dilworth", "square"], ["count", "square"],
    ["ksets", "square", "--k", "2"], ["zonotope", "square"], ["veronese", "square", "--degree", "2"],
    ["allowable", "gp_pentagon_graph"], ["allowable", "gp_pentagon_sequence", "--sequence"],
    ["euler", "square"], ["pseudosweeps", "square"],
])
def test_commands_run(cmd, capsys):
    code, out = run_json(cmd, capsys)
    assert code == 0 and out


def test_om_roundtrip(tmp_path, capsys):
    path = tmp_path / "big.json"
    assert cli.run(["bigom", "triangle", "-o", str(path)]) == 0
    M = io.load(path)
    assert isinstance(M, om.OrientedMatroid)
    assert M.covectors == pc.big_om_realizable(config("triangle")).covectors
    for kind in ("topes", "cocircuits"):
        again = io.parse(json.loads(json.dumps(io.om_to_json(M, kind))))
        assert again.covectors == M.covectors and again.ground == M.ground
    # a big OM file feeds recognize-big and check-om directly
    code, out = run_json(["recognize-big", str(path)], capsys)
    assert code == 0 and out["ok"]
    code, out = run_json(["check-om", str(path)], capsys)
    assert code == 0


def test_config_roundtrip(tmp_path):
    path = tmp_path / "v.json"
    assert cli.run(["veronese", "triangle", "--degree", "2", "-o", str(path)]) == 0
    V = io.load(path)
    assert V == pc.veronese(config("triangle"), 2)


def test_poset_roundtrip(tmp_path, capsys):
    P = sw.poset_of_sweeps(sweep("square"), nontrivial=True)
    path = tmp_path / "poset.json"
    path.write_text(json.dumps(P.to_json()))
    obj = io.load(path)
    Q = om.Poset.from_covers(obj["elements"], [tuple(c) for c in obj["covers"]])
    assert (Q.less == P.less).all()
    code, out = run_json(["euler", str(path)], capsys)
    assert code == 0 and out["euler"] == 0


def test_check_om_failure_exit_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"ground": {"labels": ["a", "b"]}, "from": "covectors",
                                "covectors": ["00", "++", "--", "+-", "-+"]}))
    code, out = run_json(["check-om", str(path)], capsys)
    assert code == 1 and out["kind"] == "validation"


def test_malformed_exit_2(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, out = run_json(["sweeps", str(path)], capsys)
    assert code == 2 and out["kind"] == "malformed-input"
    code, out = run_json(["sweeps", str(tmp_path / "missing.json")], capsys)
    assert code == 2


def test_bad_subcommand():
    assert cli.run(["frobnicate"]) == 2


def test_allowable_rejection_exit(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps([[1, 2, 3], [3, 2, 1], [2, 1, 3]]))
    code, out = run_json(["allowable", str(path)], capsys)
    assert code in (0, 1)
    assert out.get("ok") is False or out.get("kind") == "validation"


def test_csv_input(tmp_path, capsys):
    path = tmp_path / "pts.csv"
    path.write_text("0,0\n1,0\n0,1\n")
    code, out = run_json(["sweeps", str(path)], capsys)
    assert code == 0 and out["topes"] == 6


def test_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("SWEEPSCOPE_MAX_COVECTORS", "10")
    code, out = run_json(["sweeps", "simplex4"], capsys)
    assert code == 1 and out["kind"] == "cap-exceeded"
