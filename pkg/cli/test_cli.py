#!/usr/bin/env python3
"""
Tests for the command-line front end: JSON documents, exit codes and
byte-for-byte reproducibility.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import io
import json

import pytest

import estimates.delta_estimates as delta_estimates
import local_model.probes as probes
import reporting.report_builder as report_builder
from cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main
from errors import ConsistencyError

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
QUARTIC = os.path.join(ROOT, "data", "k3_quartic.json")


def run_cli(*argv):
    """Run the CLI in-process; returns (exit code, parsed stdout or None, stderr text)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None), err.getvalue()


def test_classify_command():
    print("🖥️ Testing classify...")
    code, doc, err = run_cli("classify", "--surface", QUARTIC, "--v", "2;0;-2", "--v-general")
    assert code == EXIT_OK
    assert doc["command"] == "classify" and doc["seed"] == 0
    assert doc["result"]["case"] == "B"
    assert doc["result"]["dim_M"] == 10
    assert doc["result"]["sing_codim"] == 2
    assert "VERDICT" in err

    code, doc, _ = run_cli("classify", "--surface", QUARTIC, "--v", "3;0;-3", "--v-general", "--quiet")
    assert code == EXIT_OK
    assert doc["result"]["case"] == "C"
    assert doc["result"]["resolution"] == "DoesNotExist"
    print("✅ classify documents")


def test_classify_input_errors(tmp_path):
    assert run_cli("classify", "--v", "2;0;-2")[0] == EXIT_INPUT
    assert run_cli("classify", "--surface", QUARTIC, "--v", "2;0")[0] == EXIT_INPUT
    assert run_cli("classify", "--surface", QUARTIC, "--v", "2;0,1;-2")[0] == EXIT_INPUT
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run_cli("classify", "--surface", str(broken), "--v", "2;0;-2")[0] == EXIT_INPUT
    assert run_cli("classify", "--surface", str(tmp_path / "missing.json"), "--v", "2;0;-2")[0] == EXIT_INPUT


def test_local_model_command():
    code, doc, _ = run_cli("local-model", "--e0", "2", "--type", "(1,2)", "--probes", "3", "--quiet")
    assert code == EXIT_OK
    result = doc["result"]
    assert result["omega_nondegenerate"] is True
    assert result["summary"]["exceptional"] is True
    assert len(result["points"]) == 4
    assert all(p["law_holds"] for p in result["points"])

    assert run_cli("local-model", "--e0", "2", "--type", "(1,2)", "--model", '{"n": [1], "D": [[2]]}')[0] == EXIT_INPUT
    assert run_cli("local-model", "--type", "(1,2)")[0] == EXIT_INPUT
    assert run_cli("local-model", "--e0", "3", "--type", "(1,2)")[0] == EXIT_INPUT


def test_verify_estimates_command():
    print("🖥️ Testing verify-estimates...")
    code, doc, _ = run_cli("verify-estimates", "--model", '{"n": [2], "D": [[4]]}', "--quiet")
    assert code == EXIT_OK
    assert doc["result"]["min_delta"] == 3

    code, doc, _ = run_cli("verify-estimates", "--sweep", "--max-total", "4", "--max-entry", "6", "--quiet")
    assert code == EXIT_OK
    assert doc["result"]["exceptional_configurations"] == ["n=(1,1), d_12=2", "n=(2), d_11=4"]
    assert doc["result"]["violations"] == []

    assert run_cli("verify-estimates", "--model", '{"n": [1], "D": [[2]]}')[0] == EXIT_INPUT
    assert run_cli("verify-estimates")[0] == EXIT_INPUT
    print("✅ verify-estimates exit codes")


def test_count_points_command():
    code, doc, _ = run_cli("count-points", "--model", '{"n": [1], "D": [[2]]}', "--primes", "2", "--quiet")
    assert code == EXIT_OK
    assert doc["result"]["counts"][0]["solutions"] == 4
    assert doc["result"]["expected_dim"] == 2

    code, doc, _ = run_cli("count-points", "--model", '{"n": [1, 1], "D": [[2, 2], [2, 2]]}',
                           "--primes", "2,3,5", "--quiet")
    assert code == EXIT_OK
    assert [c["solutions"] for c in doc["result"]["counts"]] == [160, 2673, 90625]
    assert "dim_estimate" in doc["result"]

    assert run_cli("count-points", "--model", '{"n": [1], "D": [[2]]}', "--primes", "4")[0] == EXIT_INPUT
    assert run_cli("count-points", "--model", '{"n": [3], "D": [[8]]}', "--primes", "2")[0] == EXIT_INPUT


def test_report_command():
    print("🖥️ Testing report...")
    args = ("report", "--surface", QUARTIC, "--v", "2;0;-2", "--v-general", "--seed", "3", "--quiet")
    first = io.StringIO()
    second = io.StringIO()
    assert main(list(args), out=first, err=io.StringIO()) == EXIT_OK
    assert main(list(args), out=second, err=io.StringIO()) == EXIT_OK
    assert first.getvalue() == second.getvalue()
    doc = json.loads(first.getvalue())
    assert doc["seed"] == 3
    assert doc["result"]["strata"]["min_codim"] == 2
    assert sum(1 for e in doc["result"]["local_models"] if e["model"]["exceptional"]) == 2

    code, doc, _ = run_cli("report", "--surface", QUARTIC, "--v", "3;0;-3", "--v-general", "--quiet")
    assert code == EXIT_OK
    assert any("no projective symplectic resolution" in n for n in doc["result"]["verdict"]["notes"])

    code, doc, _ = run_cli("report", "--surface", QUARTIC, "--v", "0;0;4", "--quiet")
    assert code == EXIT_OK
    assert doc["result"]["verdict"]["case"] == "ZeroDimTorsion"
    assert doc["result"]["local_models"] == []
    print("✅ report reproducible")


def test_verification_failure_exits_one(monkeypatch):
    """Disagreeing Delta forms surface as exit 1 with the counterexample."""
    print("🖥️ Testing verification failure exit code...")
    monkeypatch.setattr(delta_estimates, "semisimple_pairwise_form", lambda n, D, split: -99)
    code, doc, err = run_cli("verify-estimates", "--model", '{"n": [2], "D": [[4]]}')
    assert code == EXIT_FAILED
    assert doc["command"] == "verify-estimates"
    assert "disagree" in doc["result"]["error"]
    assert doc["result"]["counterexample"]["n"] == [2]
    assert -99 in doc["result"]["counterexample"]["forms"]
    assert "Verification failed" in err
    print("✅ Verification failure exits 1")


def test_local_model_failed_law_exits_one(monkeypatch):
    monkeypatch.setattr(probes, "jacobian_rank", lambda model, x: -1)
    code, doc, _ = run_cli("local-model", "--e0", "2", "--type", "(1,2)", "--probes", "2", "--quiet")
    assert code == EXIT_FAILED
    assert doc["result"]["points"]
    assert not any(p["law_holds"] for p in doc["result"]["points"])


def test_report_with_failed_section_exits_one(monkeypatch):
    def broken(model, enum_limit=None):
        raise ConsistencyError("estimate 2 < 3", {"n": list(model.n)})

    monkeypatch.setattr(report_builder, "verify_bounds", broken)
    code, doc, _ = run_cli("report", "--surface", QUARTIC, "--v", "2;0;-2", "--v-general", "--quiet")
    assert code == EXIT_FAILED
    assert doc["result"]["verdict"]["case"] == "B"
    assert doc["result"]["failures"]
    assert all("estimate 2 < 3" in f for f in doc["result"]["failures"])


if __name__ == "__main__":
    import tempfile
    import pathlib
    print("=" * 80)
    print("🖥️ CLI TESTS")
    print("=" * 80)
    test_classify_command()
    with tempfile.TemporaryDirectory() as tmp:
        test_classify_input_errors(pathlib.Path(tmp))
    test_local_model_command()
    test_verify_estimates_command()
    test_count_points_command()
    test_report_command()
    for test in (test_verification_failure_exits_one, test_local_model_failed_law_exits_one,
                 test_report_with_failed_section_exits_one):
        with pytest.MonkeyPatch.context() as mp:
            test(mp)
    print("\n🎉 All CLI tests passed!")
