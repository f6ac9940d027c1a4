import csv
import json
import pathlib
import subprocess
import sys

import pytest

from bmtw.cli import main

FIXTURES = str(pathlib.Path(__file__).parent / "data" / "fixtures.json")


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# --- solve ---------------------------------------------------------------------

def test_solve_writes_trajectory_csv(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    code, _, _ = run(["solve", "--lambda-pi", "0.5", "--nu", "0",
                      "--out", str(out)], capsys)
    assert code == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["t", "q", "p", "chi", "acc_H", "acc_action", "acc_aux"]
    ts = [float(r[0]) for r in rows[1:]]
    assert all(b > a for a, b in zip(ts, ts[1:]))


def test_solve_zero_family(tmp_path, capsys):
    out = tmp_path / "zero.csv"
    code, _, _ = run(["solve", "--lambda-pi", "0", "--nu", "0",
                      "--out", str(out)], capsys)
    assert code == 0
    rows = list(csv.reader(out.open()))[1:]
    assert all(float(r[1]) == 0.0 and float(r[2]) == 0.0 for r in rows)


def test_solve_respects_t_max(tmp_path, capsys):
    out = tmp_path / "clip.csv"
    code, _, _ = run(["solve", "--lambda-pi", "0.5", "--t-max", "2.0",
                      "--out", str(out)], capsys)
    assert code == 0
    ts = [float(r[0]) for r in list(csv.reader(out.open()))[1:]]
    assert max(ts) <= 2.0 * (1 + 1e-12)


def test_solve_domain_error_exit_2(capsys):
    code, _, err = run(["solve", "--lambda-pi", "1.5", "--out", "-"], capsys)
    assert code == 2
    assert "lambda_pi" in err


def test_solve_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["solve"])  # missing required --lambda-pi
    assert exc.value.code == 2


# --- tau -----------------------------------------------------------------------

def test_tau_fredholm_record(capsys):
    code, out, _ = run(["tau", "--t", "1", "--lambda-pi", "1",
                        "--branch", "minus", "--route", "fredholm"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["route"] == "fredholm"
    assert abs(rec["value"] - 1.002051135332) < 1e-9
    assert set(rec) == {"t", "params", "branch", "route", "value", "est_error"}


def test_tau_trivial(capsys):
    code, out, _ = run(["tau", "--t", "1", "--lambda-pi", "0",
                        "--branch", "minus", "--route", "hamiltonian"], capsys)
    assert code == 0
    assert json.loads(out)["value"] == 1.0


def test_tau_fredholm_requires_lambda_pi_one(capsys):
    code, _, err = run(["tau", "--t", "1", "--lambda-pi", "0.5",
                        "--route", "fredholm"], capsys)
    assert code == 2
    assert "lambda*pi = 1" in err


def test_tau_fixture_delta_on_stderr(capsys):
    code, _, err = run(["tau", "--t", "1", "--lambda-pi", "1",
                        "--branch", "minus", "--route", "fredholm",
                        "--fixtures", FIXTURES], capsys)
    assert code == 0
    delta = json.loads(err.splitlines()[0])
    assert delta["fixture"] == "tau_minus_fredholm_t1.0_lambda_pi_1"
    assert abs(delta["delta"]) < 1e-10


# --- verify --------------------------------------------------------------------

def test_verify_constants_passes(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code, _, _ = run(["verify", "--suite", "constants", "--out", str(out)],
                     capsys)
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["suite"] == "constants"
    assert rep["n_failed"] == 0
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)
    assert any("wu_identity" in n for n in names)
    assert all(c["pass"] == (c["residual"] <= c["tolerance"])
               for c in rep["checks"])
    assert "runtime_seconds" not in rep


def test_verify_reports_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--suite", "specfn", "--out", str(a)], capsys)[0] == 0
    assert run(["verify", "--suite", "specfn", "--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_timing_flag(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code, _, _ = run(["verify", "--suite", "constants", "--timing",
                      "--out", str(out)], capsys)
    assert code == 0
    assert "runtime_seconds" in json.loads(out.read_text())


def test_verify_tol_scale_can_force_failure(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code, _, err = run(["verify", "--suite", "constants",
                        "--tol-scale", "1e-18", "--out", str(out)], capsys)
    assert code == 1
    assert "failed" in err


# --- sweep ---------------------------------------------------------------------

def test_sweep_a_est(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, _, _ = run(["sweep", "--lambda-grid", "0.25,0.5,0.75",
                      "--nu-grid", "0", "--t-grid", "1e-2,1e-3,1e-4",
                      "--quantity", "A_est", "--out", str(out)], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 3
    # convergence envelope is O(t^sigma) at the smallest sample, so the
    # tolerance is lambda-dependent (sigma(0.25) ~ 0.16 gives ~23% at 1e-4)
    import math
    for row in rows:
        sigma = (2 / math.pi) * math.asin(float(row["lambda_pi"]))
        envelope = 1.5 * (1e-4) ** sigma
        assert abs(float(row["A_est"]) / float(row["A_closed"]) - 1.0) < envelope


def test_sweep_nu_exploration_monotone(tmp_path, capsys):
    out = tmp_path / "nu.csv"
    code, _, _ = run(["sweep", "--lambda-grid", "0.5",
                      "--nu-grid", "0.1,0.25,0.45",
                      "--t-grid", "1e-2,1e-3,1e-4",
                      "--quantity", "A_est", "--out", str(out)], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    a_vals = [float(r["A_est"]) for r in rows]
    assert len(a_vals) == 3
    # exploration output: the nu-deformed amplitude orders monotonically
    assert all(b < a for a, b in zip(a_vals, a_vals[1:])) or \
        all(b > a for a, b in zip(a_vals, a_vals[1:]))


def test_sweep_empty_grid(tmp_path, capsys):
    out = tmp_path / "empty.csv"
    code, _, _ = run(["sweep", "--lambda-grid", "", "--t-grid", "",
                      "--quantity", "tau", "--out", str(out)], capsys)
    assert code == 0
    assert out.read_text().strip() == "lambda_pi,nu,t,tau_minus,tau_plus,error"


def test_sweep_records_row_failures(tmp_path, capsys):
    out = tmp_path / "bad.csv"
    code, _, _ = run(["sweep", "--lambda-grid", "0.5", "--nu-grid", "0",
                      "--t-grid", "1e-6", "--quantity", "tau",
                      "--out", str(out)], capsys)
    assert code == 1
    rows = list(csv.reader(out.open()))
    assert len(rows) == 2 and "outside trajectory range" in rows[1][-1]


def test_sweep_deterministic_output(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--lambda-grid", "0.25,0.5", "--t-grid", "0.5,1",
            "--quantity", "tau"]
    assert run(args + ["--out", str(a)], capsys)[0] == 0
    assert run(args + ["--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


# --- prefactor and constants ------------------------------------------------------

def test_prefactor_command(capsys):
    code, out, _ = run(["prefactor", "--lambda-pi", "0.5"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert abs(rec["A_est"] / rec["A_closed"] - 1.0) < 0.06
    assert 0.3 <= rec["decay_ratio"] <= 0.6


def test_constants_command(capsys):
    code, out, _ = run(["constants", "--lambda-pi", "1"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["B"] == "inf"
    assert abs(rec["wu_constant"] - 0.645002448509577) < 1e-14
    assert abs(rec["A"] - 0.542380246781572) < 1e-14


def test_constants_fixture_deltas(capsys):
    code, _, err = run(["constants", "--fixtures", FIXTURES], capsys)
    assert code == 0
    deltas = [json.loads(line) for line in err.splitlines()]
    assert {d["fixture"] for d in deltas} == {
        "wu_constant", "euler_gamma", "zeta_prime_minus_one"}
    assert all(abs(d["delta"]) < 1e-14 for d in deltas)


# --- config file -----------------------------------------------------------------

def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"t_min": 0.01, "t_seed": 16.0}))
    out = tmp_path / "traj.csv"
    code, _, _ = run(["solve", "--lambda-pi", "0.5", "--config", str(cfg),
                      "--out", str(out)], capsys)
    assert code == 0
    ts = [float(r[0]) for r in list(csv.reader(out.open()))[1:]]
    assert min(ts) == pytest.approx(0.01) and max(ts) == 16.0
    # flag beats file
    code, _, _ = run(["solve", "--lambda-pi", "0.5", "--config", str(cfg),
                      "--t-min", "0.1", "--out", str(out)], capsys)
    assert code == 0
    ts = [float(r[0]) for r in list(csv.reader(out.open()))[1:]]
    assert min(ts) == pytest.approx(0.1)


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"step_size": 0.1}))
    code, _, err = run(["solve", "--lambda-pi", "0.5", "--config", str(cfg),
                        "--out", "-"], capsys)
    assert code == 2
    assert "unknown config keys" in err


# --- console entry point ------------------------------------------------------------

def test_installed_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bmtw.cli", "constants"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "wu_constant" in proc.stdout
