import json
import subprocess
import sys

import pytest

from qsphere.cli import main
from qsphere.verify import RunReport, VerifyConfig, UsageError, run_verify


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "qsphere", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_normalize():
    assert run("normalize", "a*d") == (0, "1 + q^-1*b*c\n", "")
    assert run("normalize", "b*c - c*b")[:2] == (0, "0\n")


def test_normalize_syntax_error():
    code, out, err = run("normalize", "a*")
    assert code == 2
    assert "position 2" in err


def test_projector_text_and_json(capsys):
    assert main(["projector", "--mu", "0", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["entries"] == [["1"]]
    assert main(["projector", "--mu", "-1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["entries"][0][0] == "1 + q^-1*b*c"
    assert main(["projector", "--mu", "1", "--side", "right"]) == 0
    out = capsys.readouterr().out
    assert "[0,0] 1 + q^-1*b*c" in out  # a*d
    assert "[0,1] a*b" in out


def test_pair(capsys):
    assert main(["pair", "--mu", "-2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["chern"] == -2 and doc["rank"] == 1
    assert [t["value"] for t in doc["terms"]] == ["-1 - q^-2", "-1 + q^-2"]
    assert main(["pair", "--mu", "0"]) == 0
    out = capsys.readouterr().out
    assert "rank  (tau0): 1" in out and "chern (tau1): 0" in out
    assert main(["pair", "--mu", "3", "--side", "right", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["chern"] == -3


def test_verify_exit_codes():
    code, out, _ = run("verify", "--mu-range", "-1..1", "--checks", "idempotent")
    assert code == 0 and "overall: PASS" in out
    assert run("verify", "--q-numeric", "1")[0] == 2
    assert run("verify", "--mu-range", "3..1")[0] == 2
    assert run("verify", "--checks", "bogus")[0] == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    import qsphere.verify as verify

    monkeypatch.setattr(verify, "is_idempotent", lambda x: False)
    assert main(["verify", "--mu-range=0..0", "--checks", "idempotent"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_json_roundtrip_and_determinism(tmp_path):
    args = ["verify", "--mu-range", "-2..2", "--checks", "pairing,rank,hopf_axioms", "--format", "json", "--seed", "5"]
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(args + ["--output", str(p1)]) == 0
    assert main(args + ["--output", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    doc = json.loads(p1.read_text())
    assert RunReport.from_json(doc).to_json() == doc
    assert doc["pairing_table"] == [[1, mu] for mu in range(-2, 3)]
    assert set(doc["suites"]) == {"pairing", "rank", "hopf_axioms"}
    assert "timing_ms" not in doc


def test_timing_opt_in():
    report = run_verify(VerifyConfig(mu_min=0, mu_max=0, checks=("rank",), timing=True))
    assert set(report.to_json()["timing_ms"]) >= {"rank", "pairing_table"}


def test_config_validation():
    with pytest.raises(UsageError):
        VerifyConfig(q_numeric=-1)
    with pytest.raises(UsageError):
        VerifyConfig(mu_min=2, mu_max=1)
    with pytest.raises(UsageError):
        VerifyConfig(checks=("nope",))
