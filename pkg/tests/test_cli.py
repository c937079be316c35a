"""Command-line interface: verbs, exit statuses, determinism, config files."""

import json
import subprocess
import sys

BASE = [sys.executable, "-m", "gl2speh.cli"]
POINT = ["--p", "3", "--f", "1", "--n", "2", "--d", "2", "--theta-exponent", "1"]


def run(*args, config=None, tmp_path=None):
    cmd = list(BASE) + list(args)
    if config is not None:
        path = tmp_path / "config.json"
        path.write_text(json.dumps(config))
        cmd += ["--config", str(path)]
    return subprocess.run(cmd, capture_output=True, text=True)


def test_verify_green_point_json():
    r = run("verify", *POINT, "--output", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["passed"] is True
    names = [c["name"] for c in doc["checks"]]
    assert "gauss_sum_lemma" in names
    assert "t_power_scalar" in names
    assert doc["params"]["first"]["q"] == 3


def test_verify_output_is_byte_stable():
    a = run("verify", *POINT, "--output", "json")
    b = run("verify", *POINT, "--output", "json")
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0
    c = run("verify", *POINT)
    d = run("verify", *POINT)
    assert c.stdout == d.stdout and c.returncode == 0
    assert c.stdout.startswith("# verification report")


def test_verify_markdown_has_check_table():
    r = run("verify", *POINT)
    assert r.returncode == 0
    assert "| check | status |" in r.stdout
    assert "PASS" in r.stdout


def test_verify_failing_point_exits_one():
    r = run(
        "verify",
        "--p", "3", "--f", "1", "--n", "4", "--d", "2",
        "--theta-exponent", "1", "--theta-pi", "1/4",
        "--check", "t_chain",
        "--output", "json",
    )
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    assert doc["passed"] is False
    failing = [c["name"] for c in doc["checks"] if not c["passed"]]
    assert failing == ["t_power_scalar"]


def test_verify_usage_errors_exit_two():
    r = run("verify", "--p", "3", "--f", "1", "--n", "2", "--d", "2",
            "--theta-exponent", "4")
    assert r.returncode == 2
    assert "regular" in r.stderr
    r = run("verify", "--p", "3", "--f", "1")
    assert r.returncode == 2
    assert "missing parameters" in r.stderr
    r = run("verify", *POINT, "--check", "bogus")
    assert r.returncode == 2
    assert "unknown check" in r.stderr
    r = run("verify", *POINT, "--theta-pi", "x/y")
    assert r.returncode == 2


def test_large_points_are_gated():
    big = ["--p", "3", "--f", "1", "--n", "4", "--d", "4", "--theta-exponent", "1"]
    r = run("verify", *big, "--check", "projector")
    assert r.returncode == 2
    assert "--allow-large" in r.stderr
    # small checks on the same point pass without the flag
    r = run("verify", *big, "--check", "unit_sums")
    assert r.returncode == 0, r.stderr


def test_config_file_point_and_pair_scalar(tmp_path):
    cfg = {"p": 3, "f": 1, "n": 4, "d": 2, "theta_exponent": 1, "theta_pi": [4, 1]}
    r = run("verify", "--check", "t_chain", "--output", "json",
            config=cfg, tmp_path=tmp_path)
    assert r.returncode == 1  # the known discrepancy row
    doc = json.loads(r.stdout)
    assert doc["params"]["first"]["theta_pi"] == "zeta4[0,1]"


def test_config_flags_override(tmp_path):
    cfg = {"p": 3, "f": 1, "n": 2, "d": 2, "theta_exponent": 4}
    r = run("verify", "--theta-exponent", "1", "--output", "json",
            config=cfg, tmp_path=tmp_path)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["params"]["first"]["theta_exponent"] == 1


def test_sweep_all_regular(tmp_path):
    cfg = {
        "p": [3],
        "f": [1],
        "n": [2],
        "d": [2],
        "theta_exponent": "all_regular",
        "theta_pi": [1, 0],
    }
    r = run("sweep", "--check", "gauss_lemma", "--output", "json",
            config=cfg, tmp_path=tmp_path)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["passed"] is True
    assert len(doc["points"]) == 6
    exps = [pt["point"]["theta_exponent"] for pt in doc["points"]]
    assert exps == [1, 2, 3, 5, 6, 7]


def test_sweep_empty_grid_passes(tmp_path):
    cfg = {"p": [3], "f": [1], "n": [2], "d": [2], "theta_exponent": []}
    r = run("sweep", "--check", "unit_sums", "--output", "json",
            config=cfg, tmp_path=tmp_path)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["passed"] is True and doc["points"] == []


def test_sweep_requires_config():
    r = run("sweep")
    assert r.returncode == 2
    assert "config" in r.stderr


def test_sweep_invalid_point_exits_two(tmp_path):
    cfg = {"p": [3], "f": [1], "n": [2], "d": [3], "theta_exponent": [1]}
    r = run("sweep", config=cfg, tmp_path=tmp_path)
    assert r.returncode == 2


def test_sweep_markdown_deterministic(tmp_path):
    cfg = {"p": [3], "f": [1], "n": [2], "d": [2], "theta_exponent": [1, 2]}
    a = run("sweep", "--check", "unit_sums", config=cfg, tmp_path=tmp_path)
    b = run("sweep", "--check", "unit_sums", config=cfg, tmp_path=tmp_path)
    assert a.returncode == 0 and a.stdout == b.stdout


def test_show_model_sections():
    r = run("show-model", *POINT)
    assert r.returncode == 0, r.stderr
    for header in ("# block model", "## blocks", "## shift matrix"):
        assert header in r.stdout
    r2 = run("show-model", *POINT)
    assert r.stdout == r2.stdout


def test_show_model_json():
    r = run("show-model", *POINT, "--output", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert len(doc["blocks"]) == 4
    # json output ends with a newline and uses sorted keys
    assert r.stdout.endswith("\n")
    assert r.stdout == json.dumps(doc, indent=2, sort_keys=True) + "\n"


def test_no_subcommand_exits_two():
    r = run()
    assert r.returncode == 2
