import json
from pathlib import Path

import pytest

from reflectinv import SCHEMA
from reflectinv.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"
GROUPS = DATA / "groups"


def invoke(capsys, *argv):
    status = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, (json.loads(out) if out else None), out, err


def test_analyze_two_by_two(capsys):
    status, report, _, _ = invoke(capsys, "analyze", GROUPS / "two-by-two.json")
    assert status == 0 and report["schema"] == SCHEMA
    (h,) = report["hyperplanes"]
    assert (h["e"], h["b"], h["delta"]) == (2, 1, 0)
    assert report["arrangement"]["Q"] == "x2"
    assert report["order"] == 10


def test_analyze_with_character(capsys):
    status, report, _, _ = invoke(capsys, "analyze", "catalog:gl2f3", "--chi", "1,1,2")
    assert status == 0 and report["Q_chi"] in ("x1^3*x2 + 2*x1*x2^3", "2*x1^3*x2 + x1*x2^3")


def test_build_basis_sl2f3(capsys):
    status, report, _, _ = invoke(capsys, "build-basis", GROUPS / "sl2f3.json")
    assert status == 0
    assert sum(len(v) for v in report["ranks"].values()) == 8
    assert all(c["verdict"] == "basis" for c in report["certificates"].values())


def test_build_then_check_round_trip(capsys, tmp_path):
    for name in ["sl2f3", "baby", "sl2f2"]:
        status, report, out, _ = invoke(capsys, "build-basis", GROUPS / f"{name}.json")
        assert status == 0
        path = tmp_path / f"{name}.json"
        path.write_text(out)
        for k in report["ranks"]:
            status, check, _, _ = invoke(capsys, "saito-check", GROUPS / f"{name}.json", "--basis", path, "--k", k)
            assert status == 0 and check["certificate"]["verdict"] == "basis", (name, k)


def test_counterexample_check_fails_with_degree_mismatch(capsys):
    status, report, _, _ = invoke(
        capsys, "saito-check", GROUPS / "lower-block-f3.json", "--basis", DATA / "bases" / "lower-block-f3-drop-1-1.json"
    )
    assert status == 1
    assert report["certificate"]["diagnosis"] == "degree_mismatch"


def test_hilbert_agrees(capsys):
    status, report, _, _ = invoke(capsys, "hilbert", "catalog:sl2f3", "--dmax", "6")
    assert status == 0 and report["source"] == "closed_form" and not report["discrepancies"]
    assert report["ledger"]["m_star"] == [3, 1] and report["ledger"]["duality_holds"]


def test_hilbert_reports_discrepancy_with_wrong_invariant_degrees(capsys):
    status, report, _, _ = invoke(capsys, "hilbert", "catalog:sl2f3", "--dmax", "6", "--sgc-degrees", "4,4")
    assert status == 1 and report["discrepancies"]


def test_hilbert_falls_back_to_basis_degrees(capsys):
    status, report, _, _ = invoke(capsys, "hilbert", "catalog:transvection-f2", "--dmax", "6")
    assert status == 0 and report["source"] == "basis_degrees"


def test_oracle_dims(capsys):
    status, report, _, _ = invoke(capsys, "oracle-dims", "catalog:sl2f2", "--dmax", "3", "--module", "invariants")
    assert status == 0 and report["dimensions"] == {"0": [1, 0, 1, 1]}
    status, report, _, _ = invoke(capsys, "oracle-dims", "catalog:sl2f2", "--dmax", "2", "--k", "1")
    assert list(report["dimensions"]) == ["1"]


def test_appendix_audit(capsys):
    status, report, _, _ = invoke(capsys, "appendix-audit", "catalog:transvection-f2", "--dmax", "3")
    assert status == 0 and report["audit"]["ok"] and report["audit"]["exemption_witnesses"]
    status, _, _, err = invoke(capsys, "appendix-audit", "catalog:sl2f3")
    assert status == 2 and "one hyperplane" in err


def test_deterministic_output(capsys):
    outs = {invoke(capsys, "build-basis", "catalog:gl2f3")[2] for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize(
    "text",
    ["{not json", "[]", '{"field": {"p": 4}, "generators": [[[1, 0], [0, 1]]]}', '{"field": {"p": 3}}',
     '{"field": {"p": 3}, "generators": [[[1, 1], [1, 1]]]}', '{"catalog": "no-such-group"}'],
)
def test_malformed_input_exits_two(capsys, tmp_path, text):
    path = tmp_path / "g.json"
    path.write_text(text)
    status, report, out, err = invoke(capsys, "analyze", path)
    assert status == 2 and out == "" and err.startswith("error:")


def test_bad_basis_and_rank(capsys, tmp_path):
    bad = tmp_path / "b.json"
    bad.write_text('[{"rank": 1, "variant": "diff_derivation", "terms": [{"I": [5], "j": 1, "poly": "x1"}]}]')
    assert invoke(capsys, "saito-check", "catalog:sl2f3", "--basis", bad)[0] == 2
    assert invoke(capsys, "saito-check", "catalog:sl2f3")[0] == 2
    assert invoke(capsys, "build-basis", "catalog:sl2f3", "--k", "7")[0] == 2
    assert invoke(capsys, "oracle-dims", "catalog:sl2f3", "--dmax", "-1")[0] == 2


def test_not_a_basis_exits_one(capsys, tmp_path):
    basis = tmp_path / "b.json"
    basis.write_text(json.dumps([{"rank": 0, "variant": "derivation", "terms": [{"I": [], "j": 1, "poly": "x1"}, {"I": [], "j": 2, "poly": "x2"}]}] * 2))
    status, report, _, _ = invoke(capsys, "saito-check", "catalog:sl2f3", "--basis", basis)
    assert status == 1 and report["certificate"]["verdict"] == "not_basis"
