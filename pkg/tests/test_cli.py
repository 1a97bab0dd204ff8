import io
import json

import pytest

from torus_theta import cli
from torus_theta.oracle import CrossCheckReport


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = cli.run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def call_json(*argv):
    status, out, err = call(*argv, "--format", "json")
    assert status == 0, err
    return json.loads(out)


def test_constituents_json():
    data = call_json("constituents", "--p", "3", "--q", "5")
    expected = {"k3": [3, 5], "k2": [-2, -3], "k1": [-1, -2], "unoriented_set": [[1, 2], [2, 3], [3, 5]]}
    assert data["schema"] == 1
    assert {k: data[k] for k in expected} == expected


def test_constituents_variant():
    data = call_json("constituents", "--p", "3", "--q", "5", "--variant", "pn")
    assert data["unoriented_set"] == [[1, -2], [2, -3], [3, -5]]
    status, _, err = call("constituents", "--p", "3", "--q", "5", "--r", "1", "--variant", "pn")
    assert status == 2 and "--variant" in err


def test_classify_json():
    data = call_json("classify", "--triple", "2,3;0,0;-2,-3")
    assert (data["verdict"], data["knot"]) == ("connected_sum", [2, 3])
    data = call_json("classify", "--triple", "3,5;-2,-3;-1,-2")
    assert data["verdict"] == "prime" and (data["p"], data["q"], data["sign"]) == (3, 5, "same_signs")


def test_equiv_json():
    data = call_json("equiv", "--lhs", "3,5", "--rhs", "3,-5")
    assert (data["isotopic"], data["homeomorphic"]) == (False, True)
    data = call_json("equiv", "--lhs=-3,-5", "--rhs", "3,5")
    assert data["isotopic"]


def test_prime_and_fib():
    data = call_json("prime", "--p", "2", "--q", "3", "--r", "1")
    assert data["prime"] and (data["p"], data["q"]) == (3, 5)
    recs = call_json("fib", "--max", "7")["records"]
    assert [(r["k2"], r["k1"]) for r in recs] == [
        ([-1, -1], [-1, -2]),
        ([-2, -3], [-1, -2]),
        ([-2, -3], [-3, -5]),
        ([-5, -8], [-3, -5]),
        ([-5, -8], [-8, -13]),
    ]


def test_human_output():
    status, out, _ = call("constituents", "--p", "3", "--q", "5")
    assert status == 0
    assert "k2 = -t(2,3)" in out and "k1 = -t(1,2)" in out
    status, out, _ = call("fib", "--max", "4")
    assert "θ(3,5)" in out


def test_json_round_trip():
    runs = [
        ("classify", "--triple", "2,3;0,0;-2,-3"),
        ("classify", "--triple", "3,-5;-2,3;-1,2"),
        ("constituents", "--p", "5", "--q", "8", "--r", "2"),
        ("equiv", "--lhs", "3,5", "--rhs", "5,3"),
    ]
    for argv in runs:
        status, first, _ = call(*argv, "--format", "json")
        data = json.loads(first)
        inp = data["input"]
        if argv[0] == "classify":
            again = ("classify", "--triple", ";".join(f"{a},{b}" for a, b in inp["triple"]))
        elif argv[0] == "constituents":
            again = ("constituents", "--p", str(inp["p"]), "--q", str(inp["q"]), "--r", str(inp["r"]))
        else:
            again = ("equiv", "--lhs", "{},{}".format(*inp["lhs"]), "--rhs", "{},{}".format(*inp["rhs"]))
        assert call(*again, "--format", "json")[1] == first


def test_domain_errors():
    status, out, err = call("constituents", "--p", "4", "--q", "6", "--format", "json")
    assert status == 1 and out == ""
    assert json.loads(err)["error"] == "InvalidInput"
    status, _, err = call("classify", "--triple", "1,0;0,1;0,0", "--format", "json")
    assert status == 1 and json.loads(err)["error"] == "SumNotZero"
    status, _, err = call("classify", "--triple", "1,0;1,3;-2,-3")
    assert status == 1 and err.startswith("NotRealizable")


def test_usage_errors():
    status, _, err = call("equiv", "--lhs", "3;5", "--rhs", "3,5")
    assert status == 2 and "--lhs" in err
    status, _, err = call("constituents", "--p", "3")
    assert status == 2 and "--q" in err
    assert call("bogus")[0] == 2


def test_render(tmp_path):
    out = tmp_path / "t.svg"
    data = call_json("render", "--p", "3", "--q", "5", "--style", "cover", "--out", str(out))
    assert out.read_text().startswith("<?xml")
    assert data["width"] > 0
    status, _, err = call("render", "--p", "3", "--q", "5", "--out", str(tmp_path / "no" / "x.svg"))
    assert status == 1


def test_selftest(monkeypatch):
    status, out, _ = call("selftest", "--max", "12", "--rmax", "1")
    assert status == 0 and "0 failures" in out

    def broken(n, r):
        return CrossCheckReport(n, r, 1, 1, ["forced"])

    monkeypatch.setattr(cli, "cross_check", broken)
    status, out, _ = call("selftest", "--max", "3", "--rmax", "0", "--format", "json")
    assert status == 1 and json.loads(out)["failures"] == ["forced"]
