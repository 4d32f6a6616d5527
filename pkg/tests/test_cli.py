import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from ellgenus import linear_cpn, pontryagin_of_projective_product, product
from ellgenus.cli import main
from ellgenus.wire import (
    MalformedInput,
    data_from_json,
    data_to_json,
    pontryagin_from_json,
    pontryagin_to_json,
)

from .conftest import fixed_point_data


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    cp2 = linear_cpn([0, 1, 2])
    return {
        "cp2sum": write("cp2sum.json", {"dim": 4, "numbers": {"1": "6"}}),
        "cp4": write("cp4.json", pontryagin_to_json(pontryagin_of_projective_product([4]))),
        "cp2_012": write("cp2_012.json", data_to_json(cp2)),
        "cp1": write("cp1.json", data_to_json(linear_cpn([0, 1]))),
        "s2xs2": write("s2xs2.json", data_to_json(product(linear_cpn([0, 1]), linear_cpn([0, 1])))),
        "empty": write("empty.json", {"dim": 4, "points": []}),
        "bad": write("bad.json", {"dim": 4, "points": [{"sign": 1, "weights": [0, 1]}]}),
        "garbage": write("garbage.json", "not json at all"),
    }


def test_genus_eval_ahat(capsys, files):
    assert run(capsys, "genus", "eval", "--spec", "ahat", "--pontryagin", files["cp2sum"])[:2] == (0, "-1/4")


def test_genus_eval_signature(capsys, files):
    assert run(capsys, "genus", "eval", "--spec", "signature", "--pontryagin", files["cp4"])[:2] == (0, "1")


def test_genus_eval_elliptic(capsys, files):
    code, out, _ = run(capsys, "genus", "eval", "--spec", "elliptic:3", "--pontryagin", files["cp4"])
    assert code == 0 and out == "1 + 80*q + 880*q^2 + O(q^3)"


def test_genus_log(capsys):
    assert run(capsys, "genus", "log", "--spec", "custom:0,0", "--max-i", "2")[:2] == (0, "1, 0, 0")
    assert run(capsys, "genus", "log", "--spec", "ahat", "--max-i", "2")[:2] == (0, "1, -1/8, 3/128")


def test_genus_check(capsys):
    code, out, _ = run(capsys, "genus", "check", "--spec", "elliptic:2", "--max-i", "3")
    assert code == 0 and out.endswith("PASS")


def test_env_default_q_order(capsys, files, monkeypatch):
    monkeypatch.setenv("GENUS_Q_ORDER_DEFAULT", "2")
    code, out, _ = run(capsys, "genus", "eval", "--spec", "elliptic", "--pontryagin", files["cp4"])
    assert out == "1 + 80*q + O(q^2)"
    monkeypatch.setenv("GENUS_Q_ORDER_DEFAULT", "x")
    assert run(capsys, "genus", "eval", "--spec", "elliptic", "--pontryagin", files["cp4"])[0] == 2


def test_equiv_ahat_eval(capsys, files):
    code, out, _ = run(capsys, "equiv", "char", "--type", "ahat", "--data", files["cp2_012"], "--eval-at-one")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "(-μ^2)/(μ^4 + 2*μ^3 + 2*μ^2 + 2*μ^1 + 1)"
    assert lines[1].lstrip().startswith("NotPolynomial")
    assert lines[-1] == "value at 1: -1/8"


def test_equiv_elliptic_rigid(capsys, files):
    code, out, _ = run(capsys, "equiv", "char", "--type", "elliptic", "--q-order", "3",
                       "--data", files["s2xs2"], "--check-rigidity")
    assert code == 0
    assert out.splitlines() == ["q^0: 0", "q^1: 0", "q^2: 0", "RIGID (all coefficients 0)"]


def test_equiv_non_rigid_is_success(capsys, files):
    code, out, _ = run(capsys, "equiv", "char", "--type", "elliptic", "--q-order", "2",
                       "--data", files["cp2_012"], "--check-rigidity")
    assert code == 0
    assert "q^1: 4*λ^-2 + 8*λ^-1 + 8*λ^1 + 4*λ^2" in out
    assert "NON-RIGID" in out and "a[1,-2] = 4" in out


def test_equiv_empty(capsys, files):
    assert run(capsys, "equiv", "char", "--type", "signature", "--data", files["empty"])[:2] == (0, "0")


def test_equiv_signature_polynomial(capsys, files):
    assert run(capsys, "equiv", "char", "--type", "signature", "--data", files["cp2_012"])[:2] == (0, "1")


def test_equiv_pole_at_one(capsys, tmp_path):
    path = tmp_path / "open.json"
    path.write_text(json.dumps({"dim": 2, "points": [{"sign": 1, "weights": [1]}]}))
    code, out, _ = run(capsys, "equiv", "char", "--type", "signature", "--data", str(path), "--eval-at-one")
    assert code == 1 and "undefined" in out


def test_malformed_inputs(capsys, files):
    assert run(capsys, "equiv", "char", "--type", "signature", "--data", files["bad"])[0] == 2
    assert run(capsys, "equiv", "char", "--type", "signature", "--data", files["garbage"])[0] == 2
    assert run(capsys, "genus", "eval", "--spec", "nope", "--pontryagin", files["cp4"])[0] == 2
    assert run(capsys, "genus", "eval", "--spec", "signature", "--pontryagin", files["cp2_012"])[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["equiv", "char", "--type", "witten", "--data", files["empty"]])
    assert exc.value.code == 2


def test_construct_cpn(capsys):
    code, out, _ = run(capsys, "construct", "cpn", "--weights", "0,1,2")
    assert code == 0
    assert json.loads(out) == data_to_json(linear_cpn([0, 1, 2]))
    code, out, _ = run(capsys, "construct", "cpn", "--weights", "0,1,1")
    assert code == 1 and "non-isolated fixed set" in out


def test_construct_sphere(capsys):
    code, out, _ = run(capsys, "construct", "sphere", "--weights", "1")
    assert code == 0
    assert json.loads(out) == {"dim": 2, "points": [{"sign": 1, "weights": [1]}, {"sign": -1, "weights": [1]}]}


def test_construct_product_and_sum(capsys, files):
    code, out, _ = run(capsys, "construct", "product", files["cp1"], files["cp1"])
    assert code == 0 and len(json.loads(out)["points"]) == 4
    code, out, _ = run(capsys, "construct", "connect-sum", files["cp1"] + ":0", files["cp1"] + ":1")
    assert code == 0 and json.loads(out)["points"] == [{"sign": 1, "weights": [-1]}, {"sign": 1, "weights": [1]}]
    code, out, _ = run(capsys, "construct", "connect-sum", files["cp2_012"] + ":0", files["cp2_012"] + ":0")
    assert code == 1 and out.startswith("gluing mismatch")
    assert run(capsys, "construct", "connect-sum", files["cp1"], files["cp1"] + ":1")[0] == 2


def test_construct_check_chern(capsys):
    assert run(capsys, "construct", "check-chern", "--k", "1", "--mn", "3", "--ms", "1")[:2] == (0, "c1 = 2 (integral)")


def test_stdin_and_module_entry(files):
    data = json.dumps(data_to_json(linear_cpn([0, 1, 2, 3, 4])))
    res = subprocess.run([sys.executable, "-m", "ellgenus", "equiv", "char", "--type", "ahat", "--data", "-",
                          "--eval-at-one"], input=data, capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip().endswith("value at 1: 3/128")


@settings(max_examples=50, deadline=None)
@given(fixed_point_data(dims=(2, 4, 6, 8), max_points=5))
def test_fixed_point_json_round_trip(d):
    assert data_from_json(json.loads(json.dumps(data_to_json(d)))) == d


def test_pontryagin_json_round_trip():
    d = pontryagin_of_projective_product([2, 2, 4])
    assert pontryagin_from_json(json.loads(json.dumps(pontryagin_to_json(d)))) == d
    assert pontryagin_to_json(pontryagin_of_projective_product([4])) == {
        "dim": 8, "numbers": {"1,1": "25", "2": "10"}}


def test_wire_rejects_floats_and_extra_keys():
    with pytest.raises(MalformedInput):
        data_from_json({"dim": 2, "points": [{"sign": 1, "weights": [1.5]}]})
    with pytest.raises(MalformedInput):
        data_from_json({"dim": 2, "points": [], "extra": 1})
    with pytest.raises(MalformedInput):
        pontryagin_from_json({"dim": 4, "numbers": {"1": 0.5}})
