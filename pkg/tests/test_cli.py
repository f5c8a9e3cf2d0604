import io
import json
import subprocess
import sys

import pytest

from qtbinomial.checks import SUITES, digest, run_case, run_suite, suite_cases
from qtbinomial.cli import expand_grid, main
from qtbinomial.tpoly import TPoly


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def terms(text):
    return [(t["exp"], t["coeff"]) for t in json.loads(text)["terms"]]


def test_compute_binomial():
    code, text = run("compute", "binomial", "n=2", "k=1", "q=2")
    assert code == 0
    assert terms(text) == [("0", "1"), ("1", "1"), ("2", "1")]
    assert terms(run("compute", "binomial", "n=3", "k=0", "--q", "2")[1]) == [("0", "1")]


def test_compute_skew_schur_has_half_exponent():
    code, text = run("compute", "schur", "shape=2,2/1,0", "vars=2", "q=2")
    assert code == 0
    assert "5/2" in [e for e, _ in terms(text)]


def test_compute_round_trip_and_csv():
    _, text = run("compute", "ribbon", "alpha=1,2", "--q", "3")
    poly = TPoly.from_json(json.loads(text))
    code, csv_text = run("compute", "ribbon", "alpha=1,2", "--q", "3", "--out", "csv")
    lines = csv_text.splitlines()
    assert code == 0 and lines[0] == "exp,coeff"
    assert TPoly({int(e): int(c) for e, c in (l.split(",") for l in lines[1:])}) == poly


@pytest.mark.parametrize("obj,params", [
    ("factorial", ["n=3"]), ("multinomial", ["alpha=1,2,1"]), ("box-sum", ["n=4", "k=2"]),
    ("compatible-sum", ["n=4", "k=2"]), ("subspace-sum", ["n=4", "k=2"]),
    ("hz", ["r=2", "vars=3"]), ("ez", ["r=2", "vars=3"]), ("jt", ["shape=2,1", "vars=3"]),
    ("dual-jt", ["shape=2,1", "vars=3"]), ("tableau-sum", ["shape=2,1", "vars=3"]),
    ("perm-weight", ["w=3,1,2"]),
])
def test_every_object_computes(obj, params):
    code, text = run("compute", obj, *params, "--q", "2")
    assert code == 0 and json.loads(text)["terms"]


def test_routes_agree_through_cli():
    outs = {run("compute", name, "shape=2,1", "vars=3", "--q", "2")[1]
            for name in ("schur", "jt", "dual-jt", "tableau-sum")}
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [
    ["compute", "binomial", "n=2"],
    ["compute", "binomial", "n=2", "k=5"],
    ["compute", "binomial", "n2", "k=1"],
    ["compute", "nope", "n=2"],
    ["compute", "binomial", "n=2", "k=1", "--q", "1"],
    ["compute", "binomial", "n=2", "k=1", "--q", "2", "--q", "3"],
    ["compute", "schur", "shape=1/2", "vars=2"],
    ["check", "nope"],
    ["check", "pascal", "--jobs", "0"],
    ["table", "binomial", "n=0..x"],
    [],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_degree_guard_exit_3():
    assert run("compute", "factorial", "n=5", "--q", "3", "--degree-guard", "100")[0] == 3


def test_output_is_deterministic():
    a = run("compute", "schur", "shape=3,1", "vars=3", "--q", "2")
    assert a == run("compute", "schur", "shape=3,1", "vars=3", "--q", "2")
    c1 = run("check", "hook", "m=1", "k=1", "n=2", "--q", "2", "--no-timing", "--jobs", "2")
    c2 = run("check", "hook", "m=1", "k=1", "n=2", "--q", "2", "--no-timing")
    assert c1 == c2 and c1[0] == 0


def test_check_report_shape():
    code, text = run("check", "pascal", "n=3", "--q", "2")
    report = json.loads(text)
    assert code == 0
    assert report["suite"] == "pascal" and report["status"] == "pass"
    assert report["case_count"] == len(report["cases"]) == 9 + 7
    case = report["cases"][0]
    assert set(case) == {"parameters", "status", "lhs_digest", "rhs_digest", "wall_time"}
    assert case["lhs_digest"] == case["rhs_digest"]


def test_table_gaussian_triangle():
    code, text = run("table", "binomial", "n=0..4", "k=0..n", "--q", "2", "--eval-t1")
    rows = text.splitlines()
    assert code == 0 and rows[0] == "n,k,q,value"
    values = [int(r.split(",")[-1]) for r in rows[1:]]
    assert values == [1, 1, 1, 1, 3, 1, 1, 7, 7, 1, 1, 15, 35, 15, 1]


def test_table_ribbon_and_empty_grid():
    code, text = run("table", "ribbon", "n=3", "--q", "2")
    assert code == 0 and len(text.splitlines()) == 1 + 4
    code, text = run("table", "binomial", "n=3..2", "k=0", "--q", "2")
    assert code == 0 and text.splitlines() == ["n,k,q,value"]


def test_table_subspaces():
    code, text = run("table", "subspaces", "n=3", "k=1", "--q", "2")
    rows = text.splitlines()
    assert rows[0] == "n,k,p,pivots,free,lambda,s"
    assert len(rows) == 1 + 7


def test_expand_grid():
    assert list(expand_grid({"n": "1..2", "k": "0..n"})) == [
        {"n": 1, "k": 0}, {"n": 1, "k": 1}, {"n": 2, "k": 0}, {"n": 2, "k": 1}, {"n": 2, "k": 2}]


def test_mismatch_is_reported(monkeypatch, capsys):
    from qtbinomial import checks
    monkeypatch.setitem(checks.BODIES, "box", lambda p: [(TPoly.one(), TPoly.zero())])
    code, text = run("check", "box", "n=1", "--q", "2")
    assert code == 1
    report = json.loads(text)
    assert report["status"] == "fail" and report["failures"] == report["case_count"]
    assert "mismatches" in report["cases"][0]
    assert "FAIL box" in capsys.readouterr().err


def test_suites_expand_and_digest():
    for suite in SUITES:
        assert suite_cases(suite, {"n": 1, "m": 1, "k": 0, "box": (1,), "pairs": ((1, 2),)})
    assert digest([TPoly.one()]) == digest([TPoly({0: 1})])
    assert run_case("dickson", {"n": 2, "q": 2})["status"] == "pass"
    assert run_suite("box", {"n": 2, "qs": (2,)}, timing=False)["status"] == "pass"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qtbinomial", "compute", "binomial", "n=2", "k=1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"][0] == {"exp": "0", "coeff": "1"}
