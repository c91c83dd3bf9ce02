import csv
import json
import subprocess
import sys

import pytest

DESK_INI = """\
[tx]
elements = 4
spacing_m = 0.006875

[rx]
elements = 12
spacing_m = 0.005168835482758621
subarrays = 4@-0.13625, 4@0.0, 4@0.13625

[link]
range_m = 0.55
frequency_hz = 29e9
"""


def run(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "nfedof.cli", *args],
                          capture_output=True, text=True, cwd=cwd)


def read_profile_gains(path):
    gains = []
    with open(path) as fh:
        for row in csv.reader(fh):
            if not row or row[0].startswith("#") or row[0] == "sin_theta_m":
                continue
            gains.append(float(row[1]))
    return gains


class TestUsage:
    def test_help(self):
        proc = run("--help")
        assert proc.returncode == 0
        for name in ("beamspace", "edof-table", "metrics", "experiment"):
            assert name in proc.stdout

    def test_unknown_subcommand(self):
        assert run("frobnicate").returncode == 1

    def test_no_subcommand(self):
        assert run().returncode == 1

    def test_bad_flag_value(self):
        assert run("beamspace", "--ranges", "abc").returncode == 1


class TestFailureHygiene:
    def test_missing_config_exits_one_without_partial_files(self, tmp_path):
        out = tmp_path / "out"
        proc = run("metrics", "--config", str(tmp_path / "nope.ini"),
                   "--out", str(out))
        assert proc.returncode == 1
        assert "configuration error" in proc.stderr
        assert not out.exists()

    def test_malformed_config(self, tmp_path):
        cfg = tmp_path / "bad.ini"
        cfg.write_text("[tx]\nelements = three\nspacing_m = 0.01\n"
                       "[link]\nrange_m = 1\nfrequency_hz = 29e9\n")
        proc = run("metrics", "--config", str(cfg), "--out", str(tmp_path / "o"))
        assert proc.returncode == 1
        assert "configuration error" in proc.stderr

    def test_empty_input_dir_exits_two(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        proc = run("experiment", "--from-files", str(empty),
                   "--out", str(tmp_path / "o"))
        assert proc.returncode == 2
        assert "no input" in proc.stderr


class TestMetrics:
    def test_default_scenario_numbers(self, tmp_path):
        proc = run("metrics", "--format", "json", "--out", str(tmp_path))
        assert proc.returncode == 0
        record = json.loads((tmp_path / "metrics.json").read_text())
        assert record["emrd_m"] == pytest.approx(0.8, abs=1e-12)
        assert record["msmd_halfwave_m"] == pytest.approx(0.15, abs=1e-12)
        assert record["edof1"] == pytest.approx(1.0)
        assert record["v_max"] == 40

    def test_stdout_table_and_relative_names(self, tmp_path):
        proc = run("metrics", "--out", str(tmp_path))
        assert proc.returncode == 0
        assert "wrote metrics.csv" in proc.stdout.splitlines()
        assert str(tmp_path) not in proc.stdout
        assert "emrd_m" in proc.stdout

    def test_csv_has_all_metrics(self, tmp_path):
        run("metrics", "--out", str(tmp_path))
        text = (tmp_path / "metrics.csv").read_text()
        rows = dict(line.split(",", 1) for line in text.splitlines()[1:])
        assert float(rows["rescaled_m"]) == pytest.approx(0.8)
        assert rows["min_dims"] == "4"


class TestBeamspace:
    def test_default_two_ranges(self, tmp_path):
        proc = run("beamspace", "--out", str(tmp_path))
        assert proc.returncode == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert len(names) == 2
        assert names[0].startswith("beamspace_r1_")
        near = read_profile_gains(tmp_path / names[0])
        far = read_profile_gains(tmp_path / names[1])
        assert len(near) == 256
        assert 54 <= sum(g >= 0.5 for g in near) <= 60
        assert sum(g >= 0.5 for g in far) == 1

    def test_json_output(self, tmp_path):
        proc = run("beamspace", "--format", "json", "--ranges", "2.7,300",
                   "--out", str(tmp_path))
        assert proc.returncode == 0
        payload = json.loads((tmp_path / "beamspace.json").read_text())
        assert [entry["range_m"] for entry in payload] == [2.7, 300.0]
        assert all(len(entry["gain"]) == 256 for entry in payload)
        assert max(payload[0]["gain"]) == 1.0

    def test_summary_lines(self, tmp_path):
        proc = run("beamspace", "--ranges", "300", "--out", str(tmp_path))
        assert "1 beams within half power" in proc.stdout


class TestEdofTable:
    def test_default_table(self, tmp_path):
        proc = run("edof-table", "--out", str(tmp_path))
        assert proc.returncode == 0
        lines = (tmp_path / "edof_table.csv").read_text().splitlines()
        header = lines[0].split(",")
        assert header[0] == "range_m"
        assert header[1:] == ["theta_-60deg", "theta_-45deg", "theta_-30deg",
                              "theta_-15deg", "theta_0deg", "theta_15deg",
                              "theta_30deg", "theta_45deg", "theta_60deg"]
        assert len(lines) == 10
        first = [int(v) for v in lines[1].split(",")[1:]]
        last = [int(v) for v in lines[-1].split(",")[1:]]
        # counts peak at boresight; far out they collapse to one on the
        # lattice (off-lattice angles may straddle two beams)
        assert first == first[::-1]
        assert max(first) == first[4]
        assert first[4] > 50
        assert last == last[::-1]
        assert last[4] == 1
        assert max(last) <= 2

    def test_custom_grid_json(self, tmp_path):
        proc = run("edof-table", "--format", "json", "--ranges", "2.7",
                   "--theta-grid-deg", "0", "--out", str(tmp_path))
        assert proc.returncode == 0
        payload = json.loads((tmp_path / "edof_table.json").read_text())
        assert payload["theta_deg"] == [0.0]
        assert payload["edof2"][0][0] > 50


class TestExperiment:
    def test_synthetic_run_and_counts(self, tmp_path):
        proc = run("experiment", "--out", str(tmp_path))
        assert proc.returncode == 0
        with open(tmp_path / "experiment.csv") as fh:
            rows = list(csv.DictReader(fh))
        got = {float(r["range_m"]): int(r["estimated_edof"]) for r in rows}
        assert got == {0.15: 5, 0.25: 3, 0.35: 3, 0.55: 1, 1.0: 1, 2.0: 1}
        assert all(int(r["edof2_theory"]) >= 1 for r in rows)
        grids = sorted((tmp_path / "rssi").iterdir())
        assert len(grids) == 6

    def test_file_mode_round_trip(self, tmp_path):
        first = tmp_path / "a"
        second = tmp_path / "b"
        run("experiment", "--out", str(first))
        proc = run("experiment", "--from-files", str(first / "rssi"),
                   "--out", str(second))
        assert proc.returncode == 0
        assert (first / "reports.json").read_bytes() == \
            (second / "reports.json").read_bytes()
        assert (first / "experiment.csv").read_bytes() == \
            (second / "experiment.csv").read_bytes()

    def test_bad_file_among_good(self, tmp_path):
        src = tmp_path / "a"
        run("experiment", "--ranges-cm", "55,100", "--out", str(src))
        (src / "rssi" / "zz_bad.csv").write_text("not,a,grid\n")
        out = tmp_path / "b"
        proc = run("experiment", "--from-files", str(src / "rssi"),
                   "--out", str(out))
        assert proc.returncode == 2
        assert "zz_bad.csv" in proc.stderr
        reports = json.loads((out / "reports.json").read_text())
        assert [r["range_m"] for r in reports] == [0.55, 1.0]

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "desk.ini"
        cfg.write_text(DESK_INI)
        proc = run("experiment", "--config", str(cfg), "--ranges-cm", "55",
                   "--out", str(tmp_path / "o"))
        assert proc.returncode == 0
        reports = json.loads((tmp_path / "o" / "reports.json").read_text())
        assert reports == [{"estimated_edof": 1, "cluster_count": 1,
                            "range_m": 0.55, "method": "synthetic"}]

    def test_quantization_off(self, tmp_path):
        proc = run("experiment", "--ranges-cm", "55", "--quantize-bits", "0",
                   "--out", str(tmp_path))
        assert proc.returncode == 0
        text = (tmp_path / "rssi" / "rssi_r55cm.csv").read_text()
        assert "quantize_bits" not in text


class TestDeterminism:
    def test_rerun_bytes_identical(self, tmp_path):
        dirs = (tmp_path / "x", tmp_path / "y")
        for d in dirs:
            proc = run("experiment", "--ranges-cm", "35,55",
                       "--format", "json", "--out", str(d))
            assert proc.returncode == 0
        for name in ("reports.json", "experiment.json",
                     "rssi/rssi_r35cm.csv", "rssi/rssi_r55cm.csv"):
            assert (dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes()

    def test_metrics_rerun_identical(self, tmp_path):
        outs = []
        for sub in ("x", "y"):
            d = tmp_path / sub
            proc = run("metrics", "--out", str(d))
            outs.append(((d / "metrics.csv").read_bytes(), proc.stdout))
        assert outs[0] == outs[1]
