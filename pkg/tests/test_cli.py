import json

import pytest

from stableclass import cli, exactmath, jdata


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_j_order(capsys):
    code, out, _ = run(capsys, "--json", "j-order", "--m", "3")
    env = json.loads(out)
    assert code == 0 and env["result"] == "504" and env["schema_version"] == "1"
    assert env["provenance"]["j_m"] == "504"


def test_wall_bounds(capsys):
    code, out, _ = run(capsys, "wall", "bounds", "--m", "1", "--alpha", "56", "--beta", "6", "--json")
    env = json.loads(out)
    assert code == 0
    assert env["result"] == {"lower": "2", "upper": "43", "stable_count": "4"}
    prov = env["provenance"]
    assert (prov["d"], prov["A"], prov["A_prime"], prov["d_prime"], prov["j_bar"]) == ("2", "84", "12", "14", "12")
    assert prov["bp"] == "28" and prov["c_m"] == "2"


def test_wall_construction_values(capsys):
    _, out1, _ = run(capsys, "--json", "wall", "enumerate", "--m", "1", "--a", "28", "--b", "3")
    _, out2, _ = run(capsys, "--json", "wall", "enumerate", "--m", "1", "--alpha", "56", "--beta", "6")
    assert json.loads(out1)["result"] == json.loads(out2)["result"]
    members = json.loads(out1)["result"]["members"]
    assert members == [["2", "168"], ["6", "56"], ["8", "42"], ["14", "24"]]


def test_wall_both_pair_forms_is_usage_error(capsys):
    code, out, err = run(capsys, "wall", "bounds", "--m", "1", "--alpha", "56", "--beta", "6", "--a", "28", "--b", "3")
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["code"] == "usage"


def test_wall_bp_override(capsys):
    code, out, _ = run(capsys, "--json", "wall", "invariants", "--m", "1", "--a", "1", "--b", "7", "--bp", "7")
    env = json.loads(out)
    assert code == 0 and env["provenance"]["bp"] == "7" and env["provenance"]["bp_source"] == "override"


def test_wall_boundary_error(capsys):
    code, _, err = run(capsys, "wall", "invariants", "--m", "1", "--a", "1", "--b", "3")
    assert code == 3 and json.loads(err)["error"]["code"] == "boundary-not-standard-sphere"


def test_wall_compare(capsys):
    code, out, _ = run(
        capsys, "--json", "wall", "compare", "--m", "1", "--alpha", "2", "--beta", "168", "--alpha2", "8", "--beta2", "42"
    )
    rel = json.loads(out)["result"]["relations"]
    assert code == 0 and rel == {"almost-diffeo": False, "homotopy": False, "stable": True}


def test_spinc_census_error(capsys):
    code, out, err = run(capsys, "spinc", "census", "--c1sq", "12")
    assert code == 3 and out == ""
    assert json.loads(err)["error"]["code"] == "not-characteristic-square"


def test_spinc_census(capsys):
    code, out, _ = run(capsys, "--json", "spinc", "census", "--c1sq", "48")
    assert code == 0 and json.loads(out)["result"]["classes"] == [["2", "12"], ["4", "6"]]


def test_spinc_compare(capsys):
    code, out, _ = run(capsys, "--json", "spinc", "compare", "--s1", "4,6", "--s2", "6,4", "--relation", "equiv")
    assert json.loads(out)["result"]["holds"] is True


def test_n4k(capsys):
    code, out, _ = run(capsys, "--json", "n4k", "witness", "--k", "2", "--n", "4")
    res = json.loads(out)["result"]
    assert code == 0 and res["product"] == "60" and len(res["members"]) == 4
    code, _, err = run(capsys, "n4k", "enumerate", "--k", "3", "--product", "12")
    assert code == 3 and json.loads(err)["error"]["code"] == "hypothesis-violation"
    code, out, _ = run(capsys, "--json", "n4k", "compare", "--k", "2", "--pair1", "1,12", "--pair2", "3,4", "--relation", "stable")
    assert json.loads(out)["result"]["holds"] is True


def test_form_equiv(capsys):
    code, out, _ = run(
        capsys, "--json", "form", "equiv", "--sign1", "+", "--f1", "2,3", "--sign2", "-", "--f2=-2,3", "--modulus", "0", "--reversal"
    )
    assert code == 0 and json.loads(out)["result"]["equivalent"] is True


def test_oracle(capsys):
    code, out, _ = run(capsys, "--json", "oracle", "orbit-count", "--modulus", "24")
    assert json.loads(out)["result"] == {"modulus": "24", "formula": "157", "bruteforce": "157", "agree": True}


def test_bernoulli_table(capsys):
    code, out, _ = run(capsys, "bernoulli", "--n", "6")
    assert code == 0 and "value: 691/2730" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["j-order"],
        ["spinc", "compare", "--s1", "4", "--s2", "6,4", "--relation", "equiv"],
        ["n4k", "enumerate", "--k", "2"],
        ["j-order", "--m", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert "code" in json.loads(err)["error"]


def test_json_round_trip_and_determinism(capsys):
    argv = ["--json", "wall", "enumerate", "--m", "1", "--alpha", "56", "--beta", "6"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    env = json.loads(a)
    assert json.loads(json.dumps(env)) == env
    assert set(env) == {"schema_version", "command", "result", "provenance"}


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = out.splitlines()
    assert sum("PASS" in line for line in lines) == 12
    assert all(line.rstrip().endswith("passed") or "s  " in line for line in lines[1:])


def test_selftest_detects_corrupt_bernoulli(capsys, monkeypatch):
    exactmath.bernoulli_paper(40)
    corrupted = list(exactmath._std_even)
    corrupted[2] = corrupted[2] * 2  # B_4 = -1/30 becomes -1/15
    monkeypatch.setattr(exactmath, "_std_even", corrupted)
    jdata.clear_cache()
    try:
        code, out, err = run(capsys, "selftest")
    finally:
        monkeypatch.undo()
        jdata.clear_cache()
    assert code == 1
    assert "FAIL" in out and "selftest failed" in err
    assert "|bP_8|" in err or "Bernoulli" in err
    assert jdata.bp8_order(1) == 28
