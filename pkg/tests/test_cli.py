import json
import math

import numpy as np
import pytest

from postfock import read_grid_csv
from postfock.cli import main

JHAT = math.hypot(1.3, 1.0)
LOCUS_JT = math.asin(math.sqrt(0.5) / (1.3 / JHAT))


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if ln]
    header = lines[0].split(",")
    return [dict(zip(header, ln.split(","))) for ln in lines[1:]]


class TestStats:
    def test_boundary_rows(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "--j", "0.2", "--delta", "1",
                               "--r", "0.5", "--n", "3,5",
                               "--t-grid", "0:0:1")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 2
        for row in rows:
            assert row["source"] == "limit"
            assert float(row["mean_n"]) == float(row["n"])
            assert float(row["mandel_q"]) == -1.0

    def test_closed_form_rows(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "--n", "6",
                               "--t-grid", "1.5707963267948966:1.5707963267948966:1")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["source"] == "closed"
        assert float(row["mean_n"]) == pytest.approx(0.068153, abs=1e-5)

    def test_degenerate_rows_fall_back_to_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "--n", "3,4",
                               "--t-grid", f"{LOCUS_JT}:{LOCUS_JT}:1")
        assert code == 0
        rows = parse_csv(out)
        by_n = {row["n"]: row for row in rows}
        assert by_n["3"]["source"] == "oracle"   # odd: closed form is 0/0
        assert by_n["4"]["source"] == "closed"

    def test_oracle_only_agrees_with_closed(self, capsys):
        grid = "0.9:0.9:1"
        _, closed, _ = run_cli(capsys, "stats", "--n", "4", "--t-grid", grid)
        _, oracle, _ = run_cli(capsys, "stats", "--n", "4", "--t-grid", grid,
                               "--oracle-only")
        c, o = parse_csv(closed)[0], parse_csv(oracle)[0]
        assert c["source"] == "closed" and o["source"] == "oracle"
        for key in ("probability", "mean_n", "variance", "mandel_q"):
            assert float(c[key]) == pytest.approx(float(o[key]), abs=1e-8)


class TestSqueezeCommand:
    def test_reference_minima(self, capsys):
        code, out, _ = run_cli(capsys, "squeeze", "--n", "5,6,7,8",
                               "--t-grid",
                               "1.5707963267948966:1.5707963267948966:1")
        assert code == 0
        rows = parse_csv(out)
        got = [round(float(r["v_min"]), 4) for r in rows]
        assert got == [0.6381, 0.3037, 0.6725, 0.3498]
        assert [r["squeezed"] for r in rows] == ["false", "true", "false", "true"]


class TestCoeffs:
    def test_periodic_moduli(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--t-grid", "0.8:0.8:1")
        code2, out2, _ = run_cli(capsys, "coeffs",
                                 "--t-grid", f"{0.8 + math.pi}:{0.8 + math.pi}:1")
        row, row2 = parse_csv(out)[0], parse_csv(out2)[0]
        for key in ("abs_pair", "abs_herm", "abs_meas", "zeta", "gdet"):
            assert float(row[key]) == pytest.approx(float(row2[key]), rel=1e-10)


class TestValidation:
    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "stats", "--j", "1", "--delta", "0",
                               "--r", "2")
        assert code == 2
        assert "mu*tanh(r)" in err

    def test_bad_grid_spec_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "stats", "--t-grid", "oops")
        assert code == 2

    def test_validate_passes(self, capsys):
        code, out, _ = run_cli(capsys, "validate", "--n", "5,6",
                               "--t-grid", "0:3.14:5")
        assert code == 0
        assert "FAIL" not in out
        assert "unitarity-sum-rule" in out

    def test_validate_reports_invalid(self, capsys):
        code, _, err = run_cli(capsys, "validate", "--r", "3", "--delta", "0")
        assert code == 2
        assert "mu*tanh(r)" in err


class TestWignerCommand:
    def test_grid_files_and_negativity(self, capsys, tmp_path):
        out_dir = tmp_path / "grids"
        code, out, _ = run_cli(capsys, "wigner", "--n", "0,5",
                               "--t-grid",
                               "1.5707963267948966:1.5707963267948966:1",
                               "--bounds=-3:3:-3:3", "--nx", "41",
                               "--ny", "41", "--tol", "1e-3",
                               "--out", str(out_dir), "--negativity")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 2
        grid0 = read_grid_csv(rows[0]["file"])
        assert grid0.nx == grid0.ny == 41
        assert np.all(grid0.values > 0.0)       # outcome 0 stays positive
        assert float(rows[1]["delta_w"]) == pytest.approx(0.4261, abs=2e-3)

    def test_grid_riemann_sum(self, capsys, tmp_path):
        out_dir = tmp_path / "grids"
        code, out, _ = run_cli(capsys, "wigner", "--n", "2",
                               "--t-grid", "0.9:0.9:1",
                               "--bounds=-5.5:5.5:-5.5:5.5",
                               "--nx", "221", "--ny", "221",
                               "--out", str(out_dir))
        assert code == 0
        grid = read_grid_csv(parse_csv(out)[0]["file"])
        cell = (11.0 / 220) ** 2
        assert float(grid.values.sum()) * cell == pytest.approx(1.0, abs=1e-3)


class TestHsCommand:
    def test_pairs(self, capsys):
        code, out, _ = run_cli(capsys, "hs", "--pairs", "6:7,5:7,5:5",
                               "--t-grid",
                               "1.5707963267948966:1.5707963267948966:1")
        assert code == 0
        rows = parse_csv(out)
        assert float(rows[0]["d_hs"]) == pytest.approx(math.sqrt(2), abs=1e-6)
        assert float(rows[1]["d_hs"]) < 0.2
        assert float(rows[2]["d_hs"]) == 0.0

    def test_verify_adds_phase_space_route(self, capsys):
        code, out, _ = run_cli(capsys, "hs", "--pairs", "0:2",
                               "--t-grid", "0.9:0.9:1", "--verify")
        assert code == 0
        row = parse_csv(out)[0]
        assert float(row["d_hs"]) == pytest.approx(
            float(row["d_hs_phase_space"]), abs=1e-4)


class TestOutputHandling:
    def test_deterministic_bytes(self, capsys, tmp_path):
        args = ("sweep", "--n", "5,6", "--t-grid", "0:2.5:4")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "mandel", "--n", "5",
                               "--t-grid", "0.9:0.9:1", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[0]["n"] == 5
        assert rows[0]["source"] == "closed"

    def test_file_output_with_summary(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        code, out, _ = run_cli(capsys, "stats", "--n", "5",
                               "--t-grid", "0.9:0.9:1", "--out", str(path))
        assert code == 0
        rows = parse_csv(path.read_text())
        assert rows[0]["n"] == "5"
        assert "mean_n" in out  # human summary on stdout

    def test_float_roundtrip_17_digits(self, capsys):
        _, out, _ = run_cli(capsys, "stats", "--n", "5", "--t-grid", "0.9:0.9:1")
        row = parse_csv(out)[0]
        value = float(row["mean_n"])
        assert ("%.17g" % value) == row["mean_n"]

    def test_workers_match_serial(self, capsys):
        args = ("stats", "--n", "5,6,7", "--t-grid", "0.4:2.8:5")
        _, serial, _ = run_cli(capsys, *args)
        _, threaded, _ = run_cli(capsys, *args, "--workers", "4")
        assert serial == threaded


class TestConfigFile:
    def test_file_values_and_flag_override(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("""
# canonical weak-coupling run
j = 0.2
delta = 1.0
r = 0.5
n = 4          # single outcome
t_grid = 0.9:0.9:1
""")
        code, out, _ = run_cli(capsys, "stats", "--config", str(cfg))
        assert code == 0
        assert parse_csv(out)[0]["n"] == "4"
        # flags win over file values
        code, out, _ = run_cli(capsys, "stats", "--config", str(cfg),
                               "--n", "2")
        assert parse_csv(out)[0]["n"] == "2"

    def test_malformed_config(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("this is not a key value line\n")
        code, _, err = run_cli(capsys, "stats", "--config", str(cfg))
        assert code == 2

    def test_preset_lown(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "--preset", "lown",
                               "--t-grid", "0.9:0.9:1")
        assert code == 0
        assert [r["n"] for r in parse_csv(out)] == ["0", "1", "2", "3"]
