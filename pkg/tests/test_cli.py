import json

import pytest

from thetalab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_factorizations_json(capsys):
    code, out, err = run_cli(capsys, "verify", "factorizations")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "1"
    assert report["command"] == "verify factorizations"
    assert all(rec["status"] == "pass" for rec in report["checks"])
    assert "duration:" in err


def test_verify_psi_with_flags(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "psi", "--genus", "3", "--samples", "500", "--seed", "7"
    )
    assert code == 0
    report = json.loads(out)
    assert report["parameters"]["samples"] == 500
    claims = {rec["claim"] for rec in report["checks"]}
    assert "psi-additivity-mod4-g3" in claims


def test_coinvariants_fields(capsys):
    code, out, _ = run_cli(capsys, "coinvariants", "--genus", "4", "--r", "1")
    assert code == 0
    report = json.loads(out)
    assert report["fields"]["dimension"] == 1
    assert "A1" in report["fields"]["representative"]
    assert "A4" in report["fields"]["representative"]


def test_orbit(capsys):
    code, out, _ = run_cli(capsys, "orbit", "--genus", "2")
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["measured"]["orbit_size"] == 15


def test_theta_eval(capsys):
    code, out, _ = run_cli(capsys, "theta", "eval", "--char", "0,0")
    assert code == 0
    report = json.loads(out)
    assert report["fields"]["value_re"] == pytest.approx(1.0864348112, abs=1e-9)


def test_theta_eval_bad_point_exit_2(capsys):
    # a convergence failure is a usage-level error, not a failed check
    code, out, err = run_cli(
        capsys, "theta", "eval", "--char", "0,0", "--radius-cap", "1", "--tol", "1e-14"
    )
    assert code == 2
    assert "NotConverged" in err


def test_e_hom_pair(capsys):
    code, out, _ = run_cli(capsys, "e-hom", "--genus", "2", "--pair", "a-hat")
    assert code == 0
    report = json.loads(out)
    assert report["fields"]["order"] == 4


def test_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "generators", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "claim,status,measured,expected,provenance"
    assert all(",pass," in line for line in lines[1:])


def test_determinism(capsys):
    _, out1, _ = run_cli(capsys, "d-sign", "--seed", "3", "--samples", "5")
    _, out2, _ = run_cli(capsys, "d-sign", "--seed", "3", "--samples", "5")
    assert out1 == out2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
