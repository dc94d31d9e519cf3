import json
import subprocess
import sys

import pytest

from mirrorqm.checks import SuiteConfig, run_suite


def _run(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "mirrorqm", *args], capture_output=True, check=False)


@pytest.fixture(scope="module")
def default_json():
    return _run("--format", "json")


def test_default_run_passes(default_json):
    assert default_json.returncode == 0
    payload = json.loads(default_json.stdout)
    assert len(payload) >= 25
    assert [r["check_id"] for r in payload] == sorted(r["check_id"] for r in payload)
    assert not [r for r in payload if r["status"] == "fail"]


def test_flagged_set(default_json):
    flagged = {r["check_id"] for r in json.loads(default_json.stdout) if r["status"] == "flagged"}
    assert flagged == {
        "biquat.ijk_sign",
        "mirror.completeness_phase",
        "mirror.ghost_statistics_phi+",
        "mirror.ghost_statistics_phi-",
        "mirror.phase_norm_KJ",
    }


def test_rerun_is_byte_identical(default_json):
    assert _run("--format", "json").stdout == default_json.stdout


def test_every_anchor_is_formula_or_invented(default_json):
    for r in json.loads(default_json.stdout):
        assert r["paper_anchor"]
        assert r["paper_anchor"] == "invented" or len(r["paper_anchor"].split()) <= 8


def test_negative_control_exits_one():
    proc = _run("--corrupt-theta", "--cutoff", "4")
    assert proc.returncode == 1
    assert b"mirror.h_theta_anticommute" in proc.stderr


@pytest.mark.parametrize("args", [
    ("--cutoff", "2"),
    ("--eta", "0"),
    ("--tol", "-1"),
    ("--mode", "symbolic"),
    ("--cutoff", "many"),
])
def test_usage_errors_exit_two(args):
    proc = _run(*args)
    assert proc.returncode == 2
    assert proc.stdout == b""
    assert b"usage" in proc.stderr


def test_text_and_float_modes():
    proc = _run("--mode", "float", "--cutoff", "3", "--seed", "7")
    assert proc.returncode == 0
    lines = proc.stdout.decode().splitlines()
    assert len(lines) >= 25
    assert all(len(line.split()) >= 4 for line in lines)


def test_seed_changes_nothing_but_samples():
    a = run_suite(SuiteConfig(cutoff=3, seed=1))
    b = run_suite(SuiteConfig(cutoff=3, seed=2))
    assert [r.check_id for r in a] == [r.check_id for r in b]
    assert [r.status for r in a] == [r.status for r in b]


def test_suite_config_rejects_bad_values():
    with pytest.raises(ValueError):
        SuiteConfig(format="xml")
