import csv
import io
import json
import subprocess
import sys

import pytest

from quasicap.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, fmt9, main

HEADER = "omega,raw_capacity,gated_capacity,remote_min_pt_eig,local_min_pt_eig"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSweep:
    def test_csv_layout(self, capsys):
        code, out, _ = run(capsys, "sweep", "--steps", "3")
        assert code == EXIT_OK
        lines = out.split("\n")
        assert lines[0] == HEADER
        assert lines[-1] == ""
        assert len(lines) == 5
        assert "\r" not in out
        assert lines[3].split(",")[2] == "0.000000000"

    def test_maximum_at_window_edge(self, capsys):
        _, out, _ = run(capsys, "sweep", "--omega-min", "0.10968763", "--steps", "11")
        rows = list(csv.DictReader(io.StringIO(out)))
        best = max(rows, key=lambda r: float(r["gated_capacity"]))
        assert best["omega"] == "0.109687630"
        assert best["gated_capacity"].startswith("0.33401")

    def test_rounded_edge_sits_below_window(self, capsys):
        # 0.109687625 is a hair under the exact edge 0.10968762510..., so it is gated off
        _, out, _ = run(capsys, "sweep", "--omega-min", "0.109687625", "--steps", "2")
        assert next(csv.DictReader(io.StringIO(out)))["gated_capacity"] == "0.000000000"

    def test_file_output_is_utf8_lf(self, capsys, tmp_path):
        path = tmp_path / "curve.csv"
        code, out, _ = run(capsys, "sweep", "--steps", "5", "--out", str(path))
        assert code == EXIT_OK and out == ""
        raw = path.read_bytes()
        assert raw.decode("utf-8").startswith(HEADER + "\n")
        assert b"\r\n" not in raw

    def test_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "sweep", "--out", str(a))
        run(capsys, "sweep", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_json_round_trip(self, capsys):
        _, js, _ = run(capsys, "sweep", "--steps", "21", "--format", "json")
        _, cs, _ = run(capsys, "sweep", "--steps", "21")
        records = json.loads(js)
        rows = list(csv.DictReader(io.StringIO(cs)))
        assert len(records) == len(rows) == 21
        for rec, row in zip(records, rows):
            assert list(rec) == HEADER.split(",")
            for key, value in rec.items():
                assert float(row[key]) == pytest.approx(value, abs=5e-10)

    def test_unwritable(self, capsys, tmp_path):
        code, _, err = run(capsys, "sweep", "--out", str(tmp_path / "missing" / "x.csv"))
        assert code == EXIT_IO and "error" in err

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "sweep", "--omega-max", "0.8")
        assert code == EXIT_USAGE and "omega" in err

    def test_bad_format(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--format", "xml"])
        assert exc.value.code == EXIT_USAGE


class TestThresholds:
    def test_output(self, capsys):
        code, out, _ = run(capsys, "thresholds")
        assert code == EXIT_OK
        assert "remote = 0.1096876" in out
        assert "local = 0.0669872" in out
        assert "1/2 - sqrt(39)/16" in out and "1/2 - sqrt(48)/16" in out
        residuals = [float(line.split("=")[1]) for line in out.splitlines() if "residual" in line]
        assert len(residuals) == 2 and max(residuals) < 1e-9

    def test_other_clone_counts_rejected(self, capsys):
        code, _, err = run(capsys, "thresholds", "--n-clones", "3")
        assert code == EXIT_USAGE and "n-clones" in err


class TestChannel:
    def test_cloner(self, capsys):
        code, out, _ = run(capsys, "channel", "cloner", "--n", "2")
        assert code == EXIT_OK
        assert "fidelity: 0.833333" in out
        residual = float(next(line for line in out.splitlines() if "residual" in line).split(":")[1])
        assert residual < 1e-12

    def test_depolarizing(self, capsys):
        _, out, _ = run(capsys, "channel", "depolarizing", "--d", "3", "--p", "1")
        assert "capacity: 0.000000000" in out
        assert "kraus operators: 9" in out

    def test_complementary_and_joint(self, capsys):
        code, out, _ = run(capsys, "channel", "cloner-complementary")
        assert code == EXIT_OK and "output dim: 2" in out
        code, out, _ = run(capsys, "channel", "joint")
        assert code == EXIT_OK
        assert "input dim: 4" in out and "output dim: 9" in out
        assert "max gated capacity: 0.334017986" in out

    def test_unknown_channel(self):
        with pytest.raises(SystemExit) as exc:
            main(["channel", "amplitude-damping"])
        assert exc.value.code == EXIT_USAGE

    def test_bad_parameter(self, capsys):
        code, _, _ = run(capsys, "channel", "depolarizing", "--p", "1.5")
        assert code == EXIT_USAGE


class TestVerify:
    def test_report(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--json", str(path))
        assert code == EXIT_OK
        assert "C(depolarizing d=2 p=1) = 0: PASS" in out
        assert "Eq. 80 max = 0.3340 vs printed 0.3354: DISCREPANCY(0.0014)" in out
        assert "Eq. 68 threshold bisection = 0.109688: PASS" in out
        assert ": FAIL" not in out
        report = json.loads(path.read_text())
        assert report["ok"] and report["summary"]["FAIL"] == 0
        assert all(c["verdict"] in {"PASS", "DISCREPANCY"} for c in report["claims"])


def test_fmt9_folds_negative_zero():
    assert fmt9(-1e-17) == "0.000000000"
    assert fmt9(0.3340179856) == "0.334017986"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasicap", "sweep", "--steps", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == HEADER
