import json
import os
from fractions import Fraction

import pytest

import toricflow

SCENES = os.environ.get("TORICFLOW_SCENE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "scenes"))
QUADRIC = [[1, 0], [1, 1], [1, 2]]


def test_dual_and_hilbert():
    assert toricflow.dual_rays([[0, 1], [2, -1]], "N") == [[1, 0], [1, 2]]
    assert toricflow.hilbert_basis([[1, 0], [1, 2]]) == QUADRIC


def test_classify():
    assert toricflow.classify([[1, 0], [0, 1]], [1, 0])["kind"] == "Parabolic"
    assert toricflow.classify([[1, 0], [0, 1]], [1, -1])["kind"] == "Hyperbolic"
    assert toricflow.classify([[1, 0], [0, 1]], [1, 1])["kind"] == "Elliptic"


def test_roots():
    assert len(toricflow.roots_in_box([[1, 0], [0, 1]], 5)) == 12
    assert [e for _, e in toricflow.roots_in_box([[0, 1], [2, -1]], 3, 0)] == [[0, -1], [1, -1], [2, -1], [3, -1]]


def test_verify_quadric():
    r = toricflow.verify_compatible(QUADRIC, [0, 1], ["3", "2"])
    assert r["passed"]
    assert r["point"] == [3, 6, 12]
    assert r["limit"] == [3, 0, 0]
    assert r["flow_parameter"] == Fraction(-2)


def test_errors_carry_kind():
    with pytest.raises(toricflow.Error) as info:
        toricflow.verify_compatible([[2], [3]], [1], ["2"])
    assert info.value.args[0] == "NormalityRequired"
    assert toricflow.is_saturated([[2], [3]]) == (False, [1])


def test_cli_report_round_trip():
    code, out, err = toricflow.run_cli(["report", os.path.join(SCENES, "quadric.json")])
    assert code == 0, err
    doc = json.loads(out)
    for key in ["scene_digest", "classification", "straightening", "roots", "witness_lnd", "verification",
                "warnings", "derived_facts"]:
        assert key in doc
    assert doc["verification"][0]["verdict"] == "PASS"
    again = toricflow.run_cli(["report", os.path.join(SCENES, "quadric.json")])
    assert again == (code, out, err)


def test_cli_exit_codes():
    code, _, err = toricflow.run_cli(["verify", os.path.join(SCENES, "cuspidal.json"), "--l", "1", "--point", "x1"])
    assert code == 3
    assert "NormalityRequired" in err
