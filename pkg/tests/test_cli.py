"""Command line surface: analyze, verify, enumerate, exit codes."""

import io
import json
import contextlib

import pytest

from corbel.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = main(list(argv))
    return rc, out.getvalue(), err.getvalue()


def test_analyze_graph6_json():
    rc, out, _ = run_cli("analyze", "--graph6", "Ch", "--oracle")
    assert rc == 0
    doc = json.loads(out)
    assert doc["graph6"] == "Ch"
    assert doc["invariants"]["n"] == 4
    assert doc["invariants"]["d"] == 3
    assert doc["invariants"]["gap_free"] is True
    assert doc["oracle"] == {"depth": 5, "reg": 3}
    assert [(b["name"], b["value"]) for b in doc["bounds"]] == [
        ("thm2.4", 5),
        ("thm2.5", 5),
    ]


def test_analyze_spec_full_report(tmp_path):
    spec = {
        "base": {"n": 3, "edges": [[1, 2], [2, 3]]},
        "S": [1, 2, 3],
        "H": [{"n": 1, "edges": []}] * 3,
    }
    path = tmp_path / "wp3.json"
    path.write_text(json.dumps(spec))
    rc, out, _ = run_cli("analyze", "--spec", str(path), "--oracle", "--decompose")
    assert rc == 0
    doc = json.loads(out)
    assert doc["membership"] == {
        "in_G1": True,
        "in_G2": True,
        "in_Gprime": True,
        "witness": None,
    }
    assert [(b["name"], b["value"]) for b in doc["bounds"]] == [
        ("thm2.4", 7),
        ("thm2.5", 7),
        ("thm3.2", 7),
        ("thm4.2", 4),
        ("thm4.6", 4),
        ("thm3.5", 7),
        ("thm3.3", 7),
    ]
    assert doc["oracle"] == {"depth": 7, "reg": 4}
    dec = doc["decomposition"]
    assert dec["dimension"] == 8
    assert dec["unmixed"] is False
    assert dec["witness"]["T"] == [2]


def test_analyze_csv():
    rc, out, _ = run_cli("analyze", "--graph6", "Ch", "--format", "csv")
    assert rc == 0
    header, row = out.strip().splitlines()
    assert header == (
        "graph6,m,n,c,isolated,diam_sum,d,f,iv,im,gap_free,kappa,"
        "kappa_complete_convention,thm2.4,thm2.5"
    )
    assert row == "Ch,2,4,1,0,3,3,2,2,1,True,1,False,5,5"


def test_analyze_rejects_bad_m():
    rc, _, err = run_cli("analyze", "--graph6", "Ch", "--m", "1")
    assert rc == 2
    assert "error:" in err


def test_analyze_rejects_bad_graph6():
    rc, _, err = run_cli("analyze", "--graph6", "Bg!")
    assert rc == 2
    assert "byte" in err


def test_analyze_rejects_bad_spec_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    rc, _, err = run_cli("analyze", "--spec", str(path))
    assert rc == 2


def test_analyze_missing_file():
    rc, _, err = run_cli("analyze", "--graph", "/nonexistent/graph.json")
    assert rc == 2
    assert "error:" in err


def test_oracle_cap_is_exit_three(tmp_path):
    doc = {"n": 13, "edges": [[i, i + 1] for i in range(1, 13)]}
    path = tmp_path / "p13.json"
    path.write_text(json.dumps(doc))
    rc, _, err = run_cli("analyze", "--graph", str(path), "--oracle")
    assert rc == 3
    assert "capped" in err


def test_verify_pass_and_fail_codes():
    rc, out, err = run_cli("verify", "thm2.4")
    assert rc == 0
    assert "31 passed, 0 failed" in err
    doc = json.loads(out)
    assert doc["failed"] == 0
    assert doc["tag"] == "thm2.4"

    rc, out, err = run_cli("verify", "lem5.1")
    assert rc == 1
    assert "119 passed, 1 failed" in err
    doc = json.loads(out)
    bad = [r for r in doc["records"] if r["verdict"] != "pass"]
    assert [r["id"] for r in bad] == ["k2|S=1,2|H=2k1,2k1"]


def test_verify_unknown_tag():
    rc, _, err = run_cli("verify", "bogus-tag")
    assert rc == 2
    assert "unknown verification tag" in err


def test_enumerate_streams_specs():
    rc, out, _ = run_cli("enumerate", "--class", "g2", "--max-total", "5")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 37
    first = json.loads(lines[0])
    assert set(first) == {"base", "S", "H"}
    rc, out, _ = run_cli("enumerate", "--class", "g1", "--max-base", "2")
    assert rc == 0
    assert len(out.strip().splitlines()) == 6


def test_enumerate_requires_class():
    with pytest.raises(SystemExit):
        main(["enumerate"])
