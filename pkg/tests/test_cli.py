import json
import subprocess
import sys

from gmpy2 import mpq

from spinalg.cli import main, parse_config


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "spinalg", *args], capture_output=True, text=True
    )
    return proc


def test_parse_defaults():
    cfg = parse_config(["bi"])
    assert cfg.suites == ("bi",)
    assert cfg.pairs == 3
    assert cfg.max_degree == 4
    assert cfg.window == 4
    assert cfg.k == (mpq(1, 2), mpq(3, 2), mpq(5, 2))


def test_parse_degree_follows_pairs():
    assert parse_config(["bi", "--pairs", "4"]).max_degree == 3
    assert parse_config(["bi", "--pairs", "5"]).max_degree == 2
    assert parse_config(["bi", "--pairs", "4", "--max-degree", "1"]).max_degree == 1


def test_parse_k():
    cfg = parse_config(["dimred", "--k", "0,-3/2,7"])
    assert cfg.k == (mpq(0), mpq(-3, 2), mpq(7))


def test_all_expands_in_order():
    cfg = parse_config([])
    assert cfg.suites[0] == "clifford"
    assert set(cfg.suites) > {"bi", "racah", "dimred", "appendix"}


def test_usage_errors_exit_2():
    assert main(["bogus-suite"]) == 2
    assert main(["bi", "--pairs", "0"]) == 2
    assert main(["dimred", "--k", "x/y"]) == 2
    assert main(["bi", "--window", "1"]) == 2


def test_small_run_exit_0(tmp_path, capsys):
    report = tmp_path / "out.json"
    code = main(
        ["appendix", "--k", "1/2", "--window", "2", "--report", str(report), "--quiet"]
    )
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["config"]["k"] == ["1/2"]
    assert "jobs" not in payload["config"]
    for check in payload["checks"]:
        assert check["status"] == "pass"
        assert "elapsed_ms" in check


def test_negative_control_exit_1(tmp_path):
    proc = run_cli(
        "clifford",
        "--pairs",
        "2",
        "--max-degree",
        "1",
        "--inject-sign-error",
        "--quiet",
    )
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout
    assert "witness" in proc.stdout


def test_determinism_across_jobs(tmp_path):
    def strip_timing(payload):
        for check in payload["checks"]:
            check.pop("elapsed_ms")
        return payload

    out = []
    for jobs in ("1", "4"):
        path = tmp_path / f"r{jobs}.json"
        proc = run_cli(
            "appendix",
            "coproduct",
            "--k",
            "1/2,3/2",
            "--window",
            "2",
            "--jobs",
            jobs,
            "--quiet",
            "--report",
            str(path),
        )
        assert proc.returncode == 0
        out.append(strip_timing(json.loads(path.read_text())))
    assert out[0] == out[1]


def test_entry_point_help():
    proc = run_cli("--help")
    assert proc.returncode == 0
    assert "verify" in proc.stdout
    assert "--max-degree" in proc.stdout
