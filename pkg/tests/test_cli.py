import json
import subprocess
import sys

import pytest

from psiumbral.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_all_routes_dfwd(capsys):
    code, out, _ = run(capsys, "basic", "--delta", "dfwd:a=1", "--psi", "q", "--n", "4", "--all-routes")
    assert code == 0
    assert out.count("p_2 = -x + x^2") == 4
    assert "routes agree: yes" in out


def test_monomials_classical(capsys):
    code, out, _ = run(capsys, "basic", "--delta", "dpsi", "--psi", "classical", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["p_0 = 1", "p_1 = x", "p_2 = x^2", "p_3 = x^3"]


def test_abel_q(capsys):
    code, out, _ = run(capsys, "basic", "--delta", "abel:a=1", "--psi", "q", "--n", "2")
    assert code == 0
    assert "p_2 = (-1-q)*x + x^2" in out


def test_at_q(capsys):
    code, out, _ = run(capsys, "basic", "--delta", "laguerre", "--at-q", "2", "--n", "2")
    assert code == 0 and "p_2 = -3*x + x^2" in out


def test_verify_binomial(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "binomial", "--delta", "dfwd:a=1", "--psi", "q", "--n", "6")
    assert code == 0
    assert "FAIL" not in out


def test_verify_errata(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "errata", "--psi", "q")
    assert code == 0
    assert "differs at n = 2" in out and "agrees at q = 1" in out


def test_verify_all_custom_reports_obstruction(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--psi", "custom:nsq.json", "--n", "6")
    assert code == 0
    assert "plane binomial obstruction: first violation at n = 3" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gf", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["checks"][0]["status"] == "pass"


def test_export_latex_and_indicator(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "sequence", "--delta", "laguerre", "--n", "4", "--format", "latex")
    assert code == 0 and out.startswith("\\begin{tabular}")
    code, out, _ = run(capsys, "export", "indicator", "--delta", "dpsi", "--order", "4", "--n", "2")
    assert json.loads(out)["normalized"] == ["0", "1", "0", "0", "0"]
    target = tmp_path / "inc.csv"
    code, _, _ = run(capsys, "export", "incidence-table", "--psi", "classical", "--m", "4", "--format", "csv",
                     "--out", str(target))
    lines = target.read_text().splitlines()
    assert code == 0 and len(lines) == 6 and all(l.endswith(",yes") for l in lines[1:])


def test_export_round_trip(capsys):
    from psiumbral import export
    code, out, _ = run(capsys, "export", "sequence", "--delta", "abel:a=1", "--n", "5")
    _, polys = export.sequence_from_json(out)
    code2, out2, _ = run(capsys, "export", "sequence", "--delta", "abel:a=1", "--n", "5", "--format", "csv")
    assert export.sequence_from_csv(out2) == polys


@pytest.mark.parametrize("argv", [
    ["basic", "--delta", "bogus"],
    ["basic", "--psi", "nope"],
    ["basic", "--n", "20"],
    ["basic", "--delta", "dfwd:a=0"],
    ["basic", "--n", "15", "--all-routes"],
    ["basic", "--psi", "custom:missing.json"],
    ["export", "indicator", "--format", "csv"],
    ["export", "incidence-table", "--m", "13"],
])
def test_config_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["basic", "--route", "nowhere"])
    assert e.value.code == 2


def test_byte_deterministic():
    argv = [sys.executable, "-m", "psiumbral", "export", "sequence", "--delta", "laguerre", "--n", "5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
