"""The grl command line: outputs, exit codes, transforms, determinism."""
import json

import pytest
from click.testing import CliRunner

import grl.cli as cli_mod
from grl.cli import main
from grl.fixtures import FactResult, FixtureReport

runner = CliRunner()

GRADED_M2_Z = {
    "kind": "graded_algebra", "name": "m2-over-z", "field": "Q",
    "algebra": {"builtin": "matrix", "n": 2},
    "group": {"kind": "Zk", "k": 1},
    "degrees": [[0], [1], [-1], [0]],
}

GROUP_RING_F2_S3 = {
    "kind": "group_ring", "name": "f2-s3", "field": "F2",
    "coeff": {"builtin": "product", "n": 1},
    "group": {"kind": "finite", "name": "S3"},
}

POLY_F3 = {
    "kind": "graded_algebra", "name": "poly-f3", "field": "F3",
    "algebra": {"builtin": "truncated_poly", "n": 4},
    "group": {"kind": "Zk", "k": 1},
    "degrees": [[0], [1], [2], [3]],
}

M2Q_TRIVIAL = {
    "kind": "graded_algebra", "name": "m2q-trivial", "field": "Q",
    "algebra": {"builtin": "matrix", "n": 2},
    "group": {"kind": "finite", "name": "Z1"},
    "degrees": ["0", "0", "0", "0"],
}

F5_Z4_RING = {
    "kind": "group_ring", "name": "f5-z4", "field": "F5",
    "coeff": {"builtin": "product", "n": 1},
    "group": {"kind": "finite", "name": "Z4"},
}


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


# ---------------------------------------------------------------------------
# verify-examples.


def test_verify_examples_all_pass():
    result = runner.invoke(main, ["verify-examples"])
    assert result.exit_code == 0
    for name in ("dinf-q4", "m2-z", "poly-f3-n4", "s3-k", "triangular-n4"):
        assert f"{name}: PASS" in result.output
    assert "FAIL" not in result.output


def test_verify_examples_only_one(tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["verify-examples", "--only", "m2-z",
                                  "--json", str(out)])
    assert result.exit_code == 0
    assert "m2-z: PASS (6/6 facts)" in result.output
    payload = json.loads(out.read_text())
    assert payload[0]["name"] == "m2-z"
    assert all(f["passed"] for f in payload[0]["facts"])


def test_verify_examples_unknown_fixture():
    result = runner.invoke(main, ["verify-examples", "--only", "nope"])
    assert result.exit_code == 3


def test_verify_examples_reports_failures(monkeypatch):
    bad = FixtureReport("synthetic", "a deliberately failing fixture",
                        (FactResult("broken", "never true", False, "1", "0"),))
    monkeypatch.setattr(cli_mod, "run_all_fixtures",
                        lambda cap, budget: [bad])
    result = runner.invoke(main, ["verify-examples"])
    assert result.exit_code == 2
    assert "synthetic: FAIL" in result.output
    assert "expected '1', got '0'" in result.output


# ---------------------------------------------------------------------------
# check.


def test_check_passes_and_writes_json(tmp_path):
    inst = _write(tmp_path, "poly.json", POLY_F3)
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["check", inst, "--json", str(out)])
    assert result.exit_code == 0
    assert "result: PASS" in result.output
    payload = json.loads(out.read_text())
    assert payload["name"] == "poly-f3"
    statuses = {c["key"]: c["status"] for c in payload["claims"]}
    assert statuses["finite-support-abelian"] == "passed"
    assert statuses["identity-component"] == "passed"


def test_check_infinite_group_ring_not_evaluated(tmp_path):
    spec = {"kind": "group_ring", "name": "m2-z-ring", "field": "Q",
            "coeff": {"builtin": "matrix", "n": 2}, "group": {"kind": "Zk", "k": 1}}
    inst = _write(tmp_path, "inf.json", spec)
    result = runner.invoke(main, ["check", inst])
    assert result.exit_code == 0
    assert "enumeration: unavailable" in result.output
    assert "not_evaluated" in result.output


def test_check_bad_instance_exits_3(tmp_path):
    inst = _write(tmp_path, "bad.json", {"kind": "nope"})
    result = runner.invoke(main, ["check", inst])
    assert result.exit_code == 3
    notjson = tmp_path / "notjson.json"
    notjson.write_text("{oops")
    result = runner.invoke(main, ["check", str(notjson)])
    assert result.exit_code == 3


def test_check_missing_file_exits_2_by_click():
    # click validates the path itself before our code runs
    result = runner.invoke(main, ["check", "/no/such/file.json"])
    assert result.exit_code != 0


def test_check_budget_exits_4(tmp_path):
    inst = _write(tmp_path, "f5z4.json", F5_Z4_RING)
    result = runner.invoke(main, ["check", inst, "--budget", "100"])
    assert result.exit_code == 4
    assert "enumeration: budget_exceeded" in result.output


def test_check_transform_quotient(tmp_path):
    inst = _write(tmp_path, "f2s3.json", GROUP_RING_F2_S3)
    result = runner.invoke(main, ["check", inst, "--transform",
                                  "quotient:N=e,(123),(132)"])
    assert result.exit_code == 0
    assert "(transformed)" in result.output


def test_check_transform_quotient_non_normal_exits_3(tmp_path):
    inst = _write(tmp_path, "f2s3.json", GROUP_RING_F2_S3)
    result = runner.invoke(main, ["check", inst, "--transform", "quotient:N=e,(12)"])
    assert result.exit_code == 3


def test_check_transform_restrict(tmp_path):
    inst = _write(tmp_path, "f2s3.json", GROUP_RING_F2_S3)
    result = runner.invoke(main, ["check", inst, "--transform", "restrict:H=e,(12)"])
    assert result.exit_code == 0


def test_check_transform_unknown_exits_3(tmp_path):
    inst = _write(tmp_path, "poly.json", POLY_F3)
    result = runner.invoke(main, ["check", inst, "--transform", "frobnicate"])
    assert result.exit_code == 3


def test_check_transform_dorroh_and_phi(tmp_path):
    inst = _write(tmp_path, "poly.json", POLY_F3)
    out = tmp_path / "constructions.json"
    result = runner.invoke(main, ["check", inst, "--transform", "dorroh",
                                  "--transform", "phi", "--json", str(out)])
    assert result.exit_code == 0
    assert "construction laws: PASS" in result.output
    assert "[dorroh]" in result.output and "[phi]" in result.output
    payload = json.loads(out.read_text())
    assert payload["passed"] is True


def test_check_transform_chain_restrict_then_verify(tmp_path):
    inst = _write(tmp_path, "m2z.json", GRADED_M2_Z)
    result = runner.invoke(main, ["check", inst, "--transform",
                                  'restrict:H=[0]'])
    assert result.exit_code == 0
    assert "(transformed)" in result.output


# ---------------------------------------------------------------------------
# enumerate.


def test_enumerate_lists_idempotents(tmp_path):
    inst = _write(tmp_path, "f5z4.json", F5_Z4_RING)
    out = tmp_path / "idem.json"
    result = runner.invoke(main, ["enumerate", inst, "--json", str(out)])
    assert result.exit_code == 0
    assert "16 central idempotents:" in result.output
    payload = json.loads(out.read_text())
    assert payload["count"] == 16
    assert len(payload["idempotents"]) == 16


def test_enumerate_budget_exits_4(tmp_path):
    inst = _write(tmp_path, "f5z4.json", F5_Z4_RING)
    result = runner.invoke(main, ["enumerate", inst, "--budget", "100"])
    assert result.exit_code == 4


def test_enumerate_unsupported_exits_3(tmp_path):
    inst = _write(tmp_path, "m2q.json", M2Q_TRIVIAL)
    result = runner.invoke(main, ["enumerate", inst])
    assert result.exit_code == 3


def test_enumerate_infinite_group_exits_3(tmp_path):
    spec = {"kind": "group_ring", "name": "q-z", "field": "Q",
            "coeff": {"builtin": "product", "n": 1}, "group": {"kind": "Zk", "k": 1}}
    inst = _write(tmp_path, "qz.json", spec)
    result = runner.invoke(main, ["enumerate", inst])
    assert result.exit_code == 3


# ---------------------------------------------------------------------------
# sweep.


def test_sweep_green_and_deterministic(tmp_path):
    out1, out2 = tmp_path / "s1.json", tmp_path / "s2.json"
    args = ["sweep", "--family", "group_rings", "--field", "F2",
            "--max-order", "4"]
    r1 = runner.invoke(main, args + ["--json", str(out1)])
    r2 = runner.invoke(main, args + ["--json", str(out2)])
    assert r1.exit_code == 0 and r2.exit_code == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert "0 failed" in r1.output
    payload = json.loads(out1.read_text())
    assert [r["name"] for r in payload["reports"]] == [
        "group_ring/F2[K4]", "group_ring/F2[Z1]", "group_ring/F2[Z2]",
        "group_ring/F2[Z3]", "group_ring/F2[Z4]"]


def test_sweep_unknown_family_exits_3():
    result = runner.invoke(main, ["sweep", "--family", "bogus"])
    assert result.exit_code == 3


def test_sweep_full_default_is_green():
    result = runner.invoke(main, ["sweep"])
    assert result.exit_code == 0
    assert "69 instances" in result.output
    assert "226 passed, 0 failed" in result.output


# ---------------------------------------------------------------------------
# help text.


def test_help_lists_commands():
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for cmd in ("verify-examples", "check", "enumerate", "sweep"):
        assert cmd in result.output
