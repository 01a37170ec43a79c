import csv
import io
import json

import numpy as np
import pytest

from hingedplate import PlateConfig, Point, cli, green_eval
from hingedplate.verify import MarginReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_phi_grid_positive_and_ordered(capsys):
    code, out, _ = run(capsys, "phi", "--m", "1", "--grid", "101")
    assert code == 0
    rows = table(out)
    assert len(rows) == 101 * 101
    assert list(rows[0]) == ["x", "y", "value", "tail_bound"]
    v1 = np.array([float(r["value"]) for r in rows])
    assert np.all(v1 > 0)
    code, out, _ = run(capsys, "phi", "--m", "2", "--grid", "101")
    v2 = np.array([float(r["value"]) for r in table(out)])
    assert np.all(v2 < v1)


def test_phi_point_and_missing_args(capsys):
    code, out, _ = run(capsys, "phi", "--m", "3", "--y", "0.2", "--w", "-0.5")
    assert code == 0 and len(table(out)) == 1
    code, _, err = run(capsys, "phi", "--m", "3", "--y", "0.2")
    assert code == cli.EXIT_DOMAIN and "--grid" in err


def test_sigma_one_rejected(capsys):
    code, out, err = run(capsys, "phi", "--m", "1", "--y", "0", "--w", "0", "--sigma", "1")
    assert code == 2 and out == ""
    assert "1 - sigma" in err


def test_negative_sigma_needs_flag(capsys):
    args = ("phi", "--m", "1", "--y", "0", "--w", "0", "--sigma", "-0.2")
    assert run(capsys, *args)[0] == 2
    assert run(capsys, *args, "--experimental-sigma")[0] == 0


def test_green_point_matches_library(capsys):
    code, out, _ = run(capsys, "green", "--load", "1.0,0.2", "--at", "2.0,-0.3", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    r = green_eval(Point(1.0, 0.2), Point(2.0, -0.3), 1e-8, PlateConfig(1.0, 0.2))
    assert row["value"] == r.value and row["tail_bound"] == r.tail_bound


def test_green_grid_edges_zero(capsys):
    code, out, _ = run(capsys, "green", "--load", "1.0,0.2", "--grid", "5,3")
    rows = table(out)
    assert code == 0 and len(rows) == 15
    assert all(float(r["value"]) == 0 for r in rows if float(r["x"]) in (0.0, float(np.pi)))


def test_solve_box_close_to_green(capsys):
    code, out, _ = run(capsys, "solve", "--load", "box", "--rho", "1.2", "--w", "0.1",
                       "--alpha", "1e-4", "--eta", "1e-4", "--at", "2.0,-0.4", "--tol", "1e-10")
    assert code == 0
    v = float(table(out)[0]["value"])
    g = green_eval(Point(1.2, 0.1), Point(2.0, -0.4), 1e-10, PlateConfig(1.0, 0.2)).value
    assert abs(v - g) < 1e-6


def test_solve_box_missing_parameter(capsys):
    code, _, err = run(capsys, "solve", "--load", "box", "--rho", "1.2", "--at", "1,0")
    assert code == 2 and "--alpha" in err


def test_solve_grid_load_file(capsys, tmp_path):
    x, y = np.linspace(0, np.pi, 9), np.linspace(-1, 1, 5)
    p = tmp_path / "f.csv"
    with open(p, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["x", "y", "value"])
        for yy in y:
            for xx in x:
                wr.writerow([float(xx), float(yy), float(np.sin(xx))])
    code, out, _ = run(capsys, "solve", "--load", "grid", "--load-file", str(p),
                       "--at", "1.5,0.0", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert row["value"] > 0 and "error_estimate" in row
    code, _, err = run(capsys, "solve", "--load", "grid", "--load-file", str(tmp_path / "none.csv"),
                       "--at", "1.5,0.0")
    assert code == 2


def test_output_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ("green", "--load", "0.7,-0.2", "--grid", "7,5")
    assert cli.main([*args, "--out", str(a)]) == 0
    assert cli.main([*args, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_json_keys_sorted(capsys):
    _, out, _ = run(capsys, "constants", "--n-max", "5", "--format", "json")
    rows = json.loads(out)
    assert all(list(r) == sorted(r) for r in rows)
    assert abs(rows[0]["x"] - 0.70) < 5e-3
    assert rows[1]["Cbar"] is None and rows[2]["Cbar"] is not None


def test_constants_csv(capsys):
    code, out, _ = run(capsys, "constants")
    rows = table(out)
    assert code == 0 and len(rows) == 40
    assert rows[1]["Cbar"] == ""


def test_tolerance_unreachable_exit(capsys):
    code, _, err = run(capsys, "green", "--load", "1.0,0.0", "--at", "1.0,0.5",
                       "--tol", "1e-12", "--mode-cap", "10")
    assert code == cli.EXIT_TOL and "mode cap" in err


def test_bad_tolerance_exit(capsys):
    code, _, _ = run(capsys, "green", "--load", "1.0,0.0", "--at", "1.0,0.5", "--tol", "-1")
    assert code == cli.EXIT_DOMAIN


def test_verify_all_passes(capsys):
    code, out, err = run(capsys, "verify", "--all", "--grid", "21,11")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 24 and all(r["min_margin"] > 0 for r in reports)
    assert err.count("PASS") == 24


def test_verify_failure_exit(capsys, monkeypatch):
    def fake(grid, cfg, ids):
        return [MarginReport(i, cfg.sigma, {}, -1.0) for i in ids]
    monkeypatch.setattr(cli, "check_all", fake)
    code, _, err = run(capsys, "verify", "--id", "DIS2")
    assert code == cli.EXIT_VERIFY and "FAIL DIS2" in err


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--id", "NOPE")
    assert code == 2 and "NOPE" in err


def test_run_config_validation():
    with pytest.raises(cli.DomainError):
        cli.RunConfig("green", PlateConfig(1.0, 0.2), tol=0.0)
    with pytest.raises(cli.DomainError):
        cli.RunConfig("green", PlateConfig(1.0, 0.2), fmt="xml")
