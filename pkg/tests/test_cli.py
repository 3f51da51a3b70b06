import io
import json
import subprocess
import sys

import pytest

from modhodge.cli import run
from modhodge.poly import MultiPoly
from modhodge.series import YSeries


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_mhp_character_text():
    code, out, _ = call("mhp", "--family", "gl", "--n", "2", "--abelian-dim", "1", "--space", "char",
                        "--format", "text")
    assert code == 0
    assert out == "1 + 2(tuv) + 2(tuv)^2 + 2(tuv)^3 + (tuv)^4\n"


def test_hilb_poincare_text():
    assert call("hilb-poincare", "--n", "1", "--format", "text")[1] == "1 + 2t + t^2\n"


def test_mhp_higgs_json():
    code, out, _ = call("mhp", "--family", "gl", "--n", "2", "--abelian-dim", "1", "--space", "higgs",
                        "--format", "json")
    assert code == 0
    obj = json.loads(out)
    terms = obj["mhp"]["terms"]
    assert {"e": [2, 1, 1], "c": "2"} in terms
    assert len(terms) == 7
    assert '{"e":[2,1,1],"c":"2"}' in out
    assert obj["dim"] == 4


def test_bundle_note():
    obj = json.loads(call("mhp", "--family", "sp", "--n", "2", "--abelian-dim", "1", "--space", "bundle",
                          "--format", "json")[1])
    higgs = json.loads(call("mhp", "--family", "sp", "--n", "2", "--abelian-dim", "1",
                            "--format", "json")[1])
    assert "note" in obj and obj["mhp"] == higgs["mhp"]


def test_poincare_and_euler():
    assert call("poincare", "--family", "gl", "--n", "2", "--abelian-dim", "1")[1] == \
        "1 + 2t + 2t^2 + 2t^3 + t^4\n"
    assert call("euler", "--family", "sl", "--n", "2", "--abelian-dim", "1", "--space", "char")[1] == "2\n"
    obj = json.loads(call("euler", "--family", "gl", "--n", "3", "--abelian-dim", "2", "--format", "json")[1])
    assert obj["euler"] == "0"


def test_weyl_table_json():
    obj = json.loads(call("weyl-table", "--family", "so-even", "--n", "3")[1])
    assert obj["order"] == "24"
    assert sum(int(c["size"]) for c in obj["classes"]) == 24
    code, out, _ = call("weyl-table", "--family", "gl", "--n", "3", "--format", "text")
    assert code == 0 and out.startswith("GL(3): |W| = 6, 3 classes")


def test_pexp_plog_round_trip(tmp_path):
    src = '{"terms":[{"e":[1,0,0],"c":"2","y":1},{"e":[0,1,1],"c":"-1","y":2}]}'
    code, out, _ = call("pexp", "--input", src, "--order", "6", "--signed")
    assert code == 0
    path = tmp_path / "g.json"
    path.write_text(out)
    code, back, _ = call("plog", "--input", str(path), "--order", "6", "--signed")
    assert code == 0
    assert YSeries.from_json(json.loads(back)) == YSeries.from_json(json.loads(src), order=6)


def test_pexp_text():
    code, out, _ = call("pexp", "--input", '{"terms":[{"e":[0,0,0],"c":"1","y":1}]}', "--order", "3",
                        "--format", "text")
    assert out == "y^0: 1\ny^1: 1\ny^2: 1\ny^3: 1\n"


def test_hilb_resolution_json():
    code, out, _ = call("hilb-resolution", "--n", "2", "--abelian-dim", "1", "--space", "char")
    assert code == 0
    obj = json.loads(out)
    assert obj["euler"] == 0 and obj["crepant"] is True and obj["routes_agree"] is True
    assert MultiPoly.from_json(obj["P"]) == MultiPoly.from_univariate([1, 2, 3, 4, 2])
    assert MultiPoly.from_json(obj["E"]).to_json() == obj["E"]


def test_hilb_series():
    code, out, _ = call("hilb-series", "--base", "char", "--abelian-dim", "1", "--order", "4")
    obj = json.loads(out)
    p = YSeries.from_json(obj["P"])
    assert p[2] == MultiPoly.from_univariate([1, 2, 3, 4, 2])
    assert call("hilb-series", "--base", "higgs", "--abelian-dim", "2", "--order", "3")[0] == 0


@pytest.mark.parametrize("argv", [
    ("mhp", "--family", "gl", "--n", "2"),
    ("mhp", "--family", "e8", "--n", "2", "--abelian-dim", "1"),
    ("mhp", "--family", "gl", "--n", "0", "--abelian-dim", "1"),
    ("mhp", "--family", "gl", "--n", "2", "--abelian-dim", "1", "--torus-exponent", "3"),
    ("mhp", "--family", "so-even", "--n", "1", "--abelian-dim", "1"),
    ("weyl-table", "--family", "gl", "--n", "31"),
    ("hilb-resolution", "--n", "4", "--abelian-dim", "2", "--space", "higgs"),
    ("hilb-series", "--base", "higgs", "--abelian-dim", "2", "--order", "5"),
    ("pexp", "--input", "not json at all {"),
    ("pexp", "--input", '{"terms":[{"e":[0,0,0],"c":"1","y":0}]}'),
    ("plog", "--input", '{"terms":[{"e":[0,0,0],"c":"2","y":0}]}'),
    ("frobnicate",),
])
def test_usage_errors(argv, capsys):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""


def test_invariant_failure_exit_code(monkeypatch):
    from modhodge import cli
    from modhodge.errors import IntegralityError

    def broken(job):
        raise IntegralityError("Molien average is not integral")
    monkeypatch.setitem(cli.COMMANDS, "mhp", broken)
    code, out, err = call("mhp", "--family", "gl", "--n", "2", "--abelian-dim", "1")
    assert code == 1 and out == ""
    assert "IntegralityError" in err


def test_output_file(tmp_path):
    path = tmp_path / "out.tex"
    code, out, _ = call("mhp", "--family", "gl", "--n", "2", "--abelian-dim", "1", "--format", "latex",
                        "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text() == "1 + t(u + v) + 2t^{2}uv + t^{3}(u^{2}v + uv^{2}) + t^{4}u^{2}v^{2}\n"


def test_deterministic_across_processes():
    argv = [sys.executable, "-m", "modhodge", "mhp", "--family", "so-odd", "--n", "3", "--abelian-dim", "2",
            "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_selfcheck_subset():
    code, out, _ = call("selfcheck", "--only", "1", "11")
    assert code == 0
    assert out.count("PASS") == 2 and "2/2 checks passed" in out
