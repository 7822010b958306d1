import json
import os
import subprocess
import sys

import pytest

from mlein.cli import main
from mlein.harness import curve_filename, parse_real, table_cells

EVAL_FIELDS = {"series_value", "asym_value", "abs_rel_error", "branch", "trunc_indices", "warnings"}


def run(args, capsys):
    code = main(args)
    return code, capsys.readouterr()


def test_eval_both_reports_table_value(capsys):
    code, out = run(["eval", "ein", "--alpha", "1", "--beta", "1", "--x", "10", "--json"], capsys)
    assert code == 0
    rep = json.loads(out.out)
    assert set(rep) == EVAL_FIELDS
    assert 1.442e-6 / 3 < rep["abs_rel_error"] < 1.442e-6 * 3
    assert rep["branch"] == "log-case"


def test_eval_stokes(capsys):
    code, out = run(["eval", "ein", "--alpha", "1", "--beta", "1", "--x", "10", "--method", "asym",
                     "--stokes", "--json"], capsys)
    rep = json.loads(out.out)
    assert code == 0 and rep["branch"] == "stokes-corrected" and rep["series_value"] is None


def test_eval_series_zero(capsys):
    code, out = run(["eval", "sin", "--alpha", "0.25", "--beta", "1.3333333333333333", "--x", "0",
                     "--method", "series", "--json"], capsys)
    assert code == 0
    assert json.loads(out.out)["series_value"] == {"re": 0.0, "im": 0.0}


def test_eval_complex_and_rational_beta(capsys):
    code, out = run(["eval", "ein", "--alpha", "3/2", "--beta", "1/3", "--z", "20", "1.5707963267948966",
                     "--json"], capsys)
    rep = json.loads(out.out)
    assert code == 0 and rep["branch"] == "algebraic+exponential"
    assert rep["abs_rel_error"] < 6e-8


def test_eval_human_output(capsys):
    code, out = run(["eval", "cin", "--alpha", "1/3", "--beta", "4/3", "--x", "20"], capsys)
    assert code == 0
    assert "abs_rel_error" in out.out and "branch" in out.out


def test_exit_codes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "ein", "--alpha", "1", "--beta", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "ein", "--alpha", "x/y", "--beta", "1", "--x", "3"])
    assert exc.value.code == 2
    code, _ = run(["eval", "ein", "--alpha", "2.5", "--beta", "1", "--x", "10", "--method", "asym"], capsys)
    assert code == 3
    code, _ = run(["eval", "sin", "--alpha", "0.5", "--beta", "1", "--z", "20", "1.7", "--method", "asym"], capsys)
    assert code == 3
    code, _ = run(["eval", "ein", "--alpha", "0.1", "--beta", "1", "--x", "1e7", "--method", "series"], capsys)
    assert code == 4


def test_digits_flag_beats_environment(monkeypatch, capsys):
    monkeypatch.setenv("MLEIN_PRECISION_DIGITS", "10")
    code, _ = run(["eval", "ein", "--alpha", "1", "--beta", "1", "--x", "5", "--method", "series"], capsys)
    assert code == 3  # below the 50-digit floor
    code, _ = run(["--digits", "60", "eval", "ein", "--alpha", "1", "--beta", "1", "--x", "5",
                   "--method", "series"], capsys)
    assert code == 0


def test_table_csv_deterministic_and_parallel(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert main(["table", "T2", "--csv", str(a)]) == 0
    assert main(["table", "T2", "--csv", str(b), "--jobs", "3"]) == 0
    out = capsys.readouterr().out
    assert "theta=0pi alpha=0.5" in out and "5.494e-10" in out
    data = a.read_bytes()
    assert data == b.read_bytes()
    lines = data.decode().split("\n")
    assert lines[0] == "alpha,beta,x_or_theta,rel_err,branch"
    assert len(lines) == 27 and lines[-1] == ""
    assert b"\r" not in data
    first = lines[1].split(",")
    assert first[0] == "4.0000000000000002e-01" and first[4] == "algebraic"


def test_table_t3_writes_two_files(tmp_path, capsys):
    path = tmp_path / "t3.csv"
    assert main(["table", "T3", "--csv", str(path)]) == 0
    for fn in ("sin", "cin"):
        rows = (tmp_path / f"t3_{fn}.csv").read_text().strip().split("\n")
        assert len(rows) == 21


def test_table_branches_follow_dispatch():
    from mlein.harness import evaluate_table
    rows = evaluate_table("T1")
    for cell, rep in rows:
        if cell.alpha == 2.0:
            assert rep.branch == "alpha2"
        elif cell.alpha in (0.25, 0.5, 1.0):
            assert rep.branch == "log-case"
        else:
            assert rep.branch == "algebraic"
    t2 = {(c.alpha, round(c.x_or_theta, 6)): r.branch for c, r in evaluate_table("T2")}
    assert t2[(1.0, round(0.7853981633974483, 6))] == "log-case"
    t2s = {(c.alpha, round(c.x_or_theta, 6)): r.branch for c, r in evaluate_table("T2", stokes=True)}
    assert t2s[(1.0, round(0.7853981633974483, 6))] == "stokes-corrected"


def test_curve_files(tmp_path, capsys):
    out = tmp_path / "curves"
    assert main(["curve", "ein", "--alpha", "1", "0.5", "--beta", "1", "--x-min", "0", "--x-max", "10",
                 "--step", "0.5", "--out-dir", str(out)]) == 0
    f = out / curve_filename("ein", 1.0, "series")
    lines = f.read_text().split("\n")
    assert lines[0] == "x,value" and len(lines) == 23
    row = dict(line.split(",") for line in lines[1:-1])
    assert float(row["1.0000000000000000e+00"]) == pytest.approx(0.7965995992970531, rel=1e-15)
    assert (out / curve_filename("ein", 0.5, "series")).exists()
    assert main(["curve", "sin", "--alpha", "1", "--x-min", "10", "--x-max", "30", "--step", "10",
                 "--source", "asym-leading", "--out-dir", str(out)]) == 0
    vals = [float(l.split(",")[1]) for l in (out / curve_filename("sin", 1.0, "asym-leading")).read_text().split("\n")[1:-1]]
    assert vals == pytest.approx([1.5707963267948966] * 3, rel=1e-15)
    code = main(["curve", "ein", "--alpha", "1", "--x-min", "0", "--x-max", "80", "--step", "1",
                 "--out-dir", str(out)])
    assert code == 3


def test_selftest(capsys):
    code, out = run(["selftest"], capsys)
    assert code == 0
    assert out.out.count("PASS") == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mlein", "selftest"], capture_output=True, text=True)
    assert res.returncode == 0


def test_parse_real_and_grid_sizes():
    assert parse_real("4/3") == 4 / 3
    assert parse_real("0.25") == 0.25
    assert len(table_cells("T1")) == 40
    assert len(table_cells("T2")) == 25
    assert len(table_cells("T3")) == 40
