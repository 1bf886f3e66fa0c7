import json
import os
import subprocess

import pytest

CLI = os.environ.get("ZHUALG_CLI")
FIXTURES = os.environ.get("ZHUALG_FIXTURES")

TINY = "T=1..2,l=0,wu=0..1,wv=1,dM=0,dp=0"

pytestmark = pytest.mark.skipif(CLI is None, reason="ZHUALG_CLI not set")


def run(*args, check=None):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check is not None:
        assert proc.returncode == check, proc.stderr
    return proc


def test_help_exits_clean():
    assert run("--help").returncode == 0
    assert run("coeffs", "--help").returncode == 0


def test_coeffs_report(tmp_path):
    out = tmp_path / "coeffs.json"
    run("coeffs", "--sweep", TINY, "--out", str(out), check=0)
    doc = json.loads(out.read_text())
    assert doc["config"]["command"] == "coeffs"
    assert doc["pass"] is True
    assert doc["cells"]
    first = doc["cells"][0]
    assert first["T"] == 1
    assert first["systems"][0]["lambda"] == []  # untwisted: nothing to solve
    twisted = [c for c in doc["cells"] if c["T"] == 2]
    assert twisted and any(s["lambda"] for c in twisted for s in c["systems"])


def test_product_report_on_stdout():
    proc = run("product", "--sweep", "T=2,l=0,i=0,wu=1,wv=1,dM=0,dp=0", check=0)
    doc = json.loads(proc.stdout)
    assert doc["pass"] is True
    (cell,) = doc["cells"]
    assert cell["K"] == cell["M"] + 40
    assert all(r["member"] for r in cell["residues"])


def test_detcheck_is_deterministic():
    args = ("detcheck", "--sweep", TINY)
    first, second = run(*args, check=0), run(*args, check=0)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["pass"] is True


def test_double_report():
    proc = run("double", "--fixture", os.path.join(FIXTURES, "z4.json"), check=0)
    doc = json.loads(proc.stdout)
    assert doc["pass"] is True
    assert doc["dim"] == 8
    assert doc["block_dims"] == [2, 2]
    assert doc["radical_dim"] == 0


def test_exit_codes():
    # Unknown sweep variable: input contract violation.
    bad_sweep = run("coeffs", "--sweep", "bogus=1")
    assert bad_sweep.returncode == 2
    # Unreadable fixture: input contract violation.
    missing = run("double", "--fixture", "/nonexistent/f.json")
    assert missing.returncode == 2
    # Working order below the supported minimum.
    low_trunc = run("product", "--sweep", TINY, "--trunc", "5")
    assert low_trunc.returncode == 2
    # Injected singular system: mathematical failure.
    singular = run("coeffs", "--sweep", TINY, "--inject-singular")
    assert singular.returncode == 1
    # Unknown subcommand is a usage error.
    assert run("frobnicate").returncode == 2
