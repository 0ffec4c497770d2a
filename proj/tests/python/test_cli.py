import json
import os
import subprocess

import pytest

CLI = os.environ.get("DSMALE_CLI", "dsmale")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_metrics_of_g1(tmp_path):
    poly = tmp_path / "g1.txt"
    ext = run("extremal")
    assert ext.returncode == 0
    g1 = json.loads(ext.stdout)["g1"]["numeric"]
    assert g1["T"] == pytest.approx(1 / 7, abs=1e-10)
    # (1 - (1 - z)^7) / 7
    coeffs = [0, 1, -3, 5, -5, 3, -1, "1/7"]
    poly.write_text("\n".join(str(c) for c in coeffs) + "\n")
    out = run("metrics", "--poly", str(poly))
    assert out.returncode == 0, out.stderr
    m = json.loads(out.stdout)["metrics"]
    for key in ("T", "S", "lambda"):
        assert m[key] == pytest.approx(1 / 7, abs=1e-9)


def test_deterministic_reports():
    a = run("sample-check", "--n", "3", "--samples", "200", "--pairs", "50", "--disc-samples", "500", "--seed", "9")
    b = run("sample-check", "--n", "3", "--samples", "200", "--pairs", "50", "--disc-samples", "500", "--seed", "9")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    report = json.loads(a.stdout)
    assert report["schema"] == 1
    assert report["command"] == "sample-check"


def test_scan_orbits():
    out = run("scan", "--grid", "48", "--refine")
    assert out.returncode == 0, out.stderr
    scan = json.loads(out.stdout)["scan"]
    assert len(scan["orbits"]) == 3
    assert abs(scan["min_value"] - 1 / 49) <= 1e-10


def test_text_format_and_out(tmp_path):
    target = tmp_path / "lemma.txt"
    out = run("verify-lemma", "--samples", "20", "--format", "text", "--out", str(target))
    assert out.returncode == 0
    text = target.read_text()
    assert "command: verify-lemma" in text


def test_exit_code_one_on_failed_check():
    out = run("scan", "--grid", "8", "--refine", "--tol", "0.5")
    assert out.returncode == 1


@pytest.mark.parametrize(
    "args",
    [
        ["no-such-command"],
        ["extremal", "--a-re", "x/y"],
        ["scan", "--grid", "4"],
        ["metrics"],
    ],
)
def test_exit_code_two_on_usage(args):
    assert run(*args).returncode == 2


def test_exit_code_two_on_bad_file(tmp_path):
    poly = tmp_path / "bad.txt"
    poly.write_text("0\n1\nabc\n")
    out = run("metrics", "--poly", str(poly))
    assert out.returncode == 2
    assert "line 3" in out.stderr


def test_verify_all():
    out = run("verify-all", "--grid", "16", "--samples", "100")
    assert out.returncode == 0, out.stderr
    assert json.loads(out.stdout)["pass"] is True
