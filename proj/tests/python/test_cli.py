"""End-to-end checks of the command-line driver."""

import json
import os
import subprocess

import pytest

aerojam = pytest.importorskip("aerojam")

CLI = os.environ.get("AEROJAM_CLI")

pytestmark = pytest.mark.skipif(
    not CLI or not os.path.exists(CLI), reason="AEROJAM_CLI not set"
)


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.fixture()
def scenario_path(tmp_path):
    scenario = aerojam.generate_random_scenario(2, 424242, 0.0)
    path = tmp_path / "scenario.json"
    aerojam.save_scenario(scenario, path)
    return path


def test_help_exits_zero():
    assert run("--help").returncode == 0


def test_missing_subcommand_is_a_usage_error():
    assert run().returncode == 2


def test_unknown_method_is_a_usage_error(scenario_path):
    result = run("solve", "--scenario", str(scenario_path), "--method", "magic")
    assert result.returncode == 2


def test_solve_writes_a_record_and_is_deterministic(tmp_path, scenario_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    args = [
        "solve",
        "--scenario",
        str(scenario_path),
        "--method",
        "proposed",
        "--mc-samples",
        "512",
    ]
    ra = run(*args, "--out", str(out_a))
    assert ra.returncode == 0, ra.stderr
    assert "expected secrecy" in ra.stdout
    rb = run(*args, "--out", str(out_b))
    assert rb.returncode == 0

    a = json.loads(out_a.read_text())
    b = json.loads(out_b.read_text())
    a.pop("duration_seconds")
    b.pop("duration_seconds")
    assert a == b
    assert a["method"] == "proposed"
    assert a["expected_secrecy_bps"] >= 0.0


def test_solve_rejects_a_broken_scenario(tmp_path):
    path = tmp_path / "broken.json"
    scenario = aerojam.generate_random_scenario(1, 5, 0.0)
    aerojam.save_scenario(scenario, path)
    doc = json.loads(path.read_text())
    del doc["bandwidth"]
    path.write_text(json.dumps(doc))
    result = run("solve", "--scenario", str(path))
    assert result.returncode == 3
    assert "bandwidth" in result.stderr


def test_sweep_grid_shape(tmp_path, scenario_path):
    out = tmp_path / "sweep.csv"
    result = run(
        "sweep",
        "--scenario",
        str(scenario_path),
        "--pmin",
        "0.1",
        "--pmax",
        "1.1",
        "--steps",
        "11",
        "--methods",
        "proposed,joint12d,conventional",
        "--out",
        str(out),
    )
    assert result.returncode == 0, result.stderr
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "p_max_watts,method,expected_secrecy_bps,std_err_bps,p_info,p_jam,seed"
    assert len(lines) == 1 + 33
    first = lines[1].split(",")
    last = lines[-1].split(",")
    assert float(first[0]) == 0.1
    assert float(last[0]) == 1.1


def test_sweep_is_deterministic(tmp_path, scenario_path):
    outs = []
    for name in ("s1.csv", "s2.csv"):
        out = tmp_path / name
        result = run(
            "sweep",
            "--scenario",
            str(scenario_path),
            "--pmin",
            "0.4",
            "--pmax",
            "1.0",
            "--steps",
            "2",
            "--methods",
            "proposed",
            "--out",
            str(out),
        )
        assert result.returncode == 0, result.stderr
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_sweep_rejects_a_single_step(tmp_path, scenario_path):
    result = run(
        "sweep",
        "--scenario",
        str(scenario_path),
        "--pmin",
        "0.5",
        "--pmax",
        "1.0",
        "--steps",
        "1",
        "--out",
        str(tmp_path / "x.csv"),
    )
    assert result.returncode == 2


def test_compare_sections(tmp_path):
    out = tmp_path / "compare.csv"
    result = run(
        "compare",
        "--trials",
        "1",
        "--n-eaves",
        "2",
        "--seed",
        "9",
        "--out",
        str(out),
    )
    assert result.returncode == 0, result.stderr
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "kind,trial,method,value_bps,std_err_bps,train_value_bps"
    trial_rows = [l for l in lines if l.startswith("trial,")]
    median_rows = [l for l in lines if l.startswith("median,")]
    winrate_rows = [l for l in lines if l.startswith("winrate,")]
    assert len(trial_rows) == 3  # one per method
    assert len(median_rows) == 3
    assert len(winrate_rows) == 2
    for row in winrate_rows:
        rate = float(row.split(",")[3])
        assert 0.0 <= rate <= 1.0
    # no jitter: train and test batches collapse to the same deterministic rate
    for row in trial_rows:
        cols = row.split(",")
        assert float(cols[3]) == float(cols[5])


def test_compare_separates_train_and_test_batches(tmp_path):
    out = tmp_path / "compare_jitter.csv"
    result = run(
        "compare",
        "--trials",
        "1",
        "--n-eaves",
        "2",
        "--seed",
        "9",
        "--jitter-std",
        "0.05",
        "--out",
        str(out),
    )
    assert result.returncode == 0, result.stderr
    lines = out.read_text().strip().splitlines()
    trial_rows = [l for l in lines if l.startswith("trial,")]
    assert len(trial_rows) == 3
    for row in trial_rows:
        cols = row.split(",")
        test_value, std_err, train_value = float(cols[3]), float(cols[4]), float(cols[5])
        # distinct seed streams: estimates of the same quantity, but not the
        # same draws
        assert test_value != train_value
        assert abs(test_value - train_value) <= 8.0 * (std_err + 1.0)


def test_validate_passes_and_corruption_is_caught():
    ok = run("validate")
    assert ok.returncode == 0
    named = [l for l in ok.stdout.splitlines() if l.startswith("[ ok ]")]
    assert len(named) >= 6

    broken = run("validate", "--corrupt-gain")
    assert broken.returncode == 1
    fail_lines = [l for l in broken.stdout.splitlines() if l.startswith("[FAIL]")]
    assert any("antenna_gain" in l for l in fail_lines)


def test_input_scenario_is_never_mutated(tmp_path, scenario_path):
    before = scenario_path.read_text()
    run("solve", "--scenario", str(scenario_path), "--method", "conventional")
    run(
        "sweep",
        "--scenario",
        str(scenario_path),
        "--pmin",
        "0.5",
        "--pmax",
        "1.0",
        "--steps",
        "2",
        "--out",
        str(tmp_path / "s.csv"),
    )
    assert scenario_path.read_text() == before
