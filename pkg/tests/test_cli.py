import json
import subprocess
import sys

import pytest

from pnverify.cli import main

REPORT_KEYS = {"command", "parameters", "assumptions", "results", "notes"}


def run(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main([*argv, "--out", str(out)])
    return code, json.loads(out.read_text())


@pytest.mark.parametrize(
    "argv",
    [
        ["registry", "show"],
        ["registry", "show", "--type", "og6"],
        ["hk", "analyze", "--type", "kummer", "--n", "2", "--q", "4"],
        ["hk", "enumerate", "--type", "og6", "--max-n", "5"],
        ["cy4", "classify", "--r", "7", "--h0g", "4", "--regular"],
        ["cy4", "theorem-a"],
        ["secant"],
        ["verify-paper"],
    ],
)
def test_report_shape(tmp_path, argv, capsys):
    code, report = run(tmp_path, *argv)
    assert code == 0
    assert set(report) == REPORT_KEYS
    assert isinstance(report["assumptions"], list) and isinstance(report["notes"], list)
    assert capsys.readouterr().out.strip()


def test_hk_analyze_k3n2(tmp_path):
    _, report = run(tmp_path, "hk", "analyze", "--type", "k3n", "--n", "2", "--q", "2")
    res = report["results"]
    assert (res["h0"], res["degreeBound"], res["pnGuaranteedFrom"]) == (6, 6, 4)
    assert [i["image"] for i in res["admissibleImages"]] == ["quadric@P5"]
    assert res["conditionalCases"][0]["l"] == 3


def test_hk_enumerate_kummer_empty(tmp_path):
    _, report = run(tmp_path, "hk", "enumerate", "--type", "kummer", "--max-n", "10")
    assert report["results"]["exceptional"] == []


def test_theorem_a_regular(tmp_path, capsys):
    code, report = run(tmp_path, "cy4", "theorem-a", "--regular")
    assert code == 0
    assert report["results"]["conclusion"] == "15A projectively normal"
    assert capsys.readouterr().out.rstrip().endswith("15A projectively normal")


def test_rationals_are_fraction_strings(tmp_path):
    _, report = run(tmp_path, "registry", "show", "--type", "k3n", "--n", "2")
    prof = report["results"]["profiles"][0]
    assert prof["rr"] == ["3/1", "5/4", "1/8"]
    assert prof["hypotheses"]["rAtAlpha"] == "11/2"


def test_verify_paper_counts(tmp_path):
    _, report = run(tmp_path, "verify-paper")
    items = report["results"]["items"]
    assert len(items) >= 20
    assert [i["claimId"] for i in items] == sorted(i["claimId"] for i in items)
    assert report["results"]["summary"]["fail"] == 0
    assert all(i["origin"] in ("stated", "derived") for i in items)


@pytest.mark.parametrize(
    "argv,fragment",
    [
        (["hk", "analyze", "--type", "k3n", "--n", "2", "--q", "3"], "even"),
        (["hk", "analyze", "--type", "k3n", "--q", "2"], "needs an explicit n"),
        (["hk", "analyze", "--type", "og6", "--n", "2", "--q", "2"], "n must be 3"),
        (["hk", "enumerate", "--type", "k3n", "--max-n", "1"], "n_max"),
        (["cy4", "classify", "--r", "3"], "r >= 4"),
        (["cy4", "classify", "--r", "6"], "h0G"),
        (["hk", "analyze", "--type", "og10", "--n", "5", "--q", "2"], "Riemann-Roch coefficients unknown"),
        (["hk", "enumerate", "--type", "og10", "--max-n", "6"], "Riemann-Roch coefficients unknown"),
        (["registry", "show", "--type", "og10"], "Riemann-Roch coefficients unknown"),
        (["hk", "analyze", "--type", "enriques", "--n", "2", "--q", "2"], "invalid choice"),
    ],
)
def test_usage_errors(argv, fragment, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert fragment in capsys.readouterr().err


def test_byte_identical_reports(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        subprocess.run(
            [sys.executable, "-m", "pnverify", "verify-paper", "--out", str(path)],
            check=True,
            capture_output=True,
        )
    assert a.read_bytes() == b.read_bytes()
