import json

import numpy as np
import pytest

from uwitness.cli import main
from uwitness.states import save_state, werner
from uwitness.witness import (
    bounds,
    moments_direct,
    rescaled_witness,
    witness_value,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReport:
    def test_singlet_json(self, capsys):
        code, out, _ = run(capsys, "--command", "report", "--state", "singlet")
        assert code == 0
        doc = json.loads(out)
        assert doc["state"] == "singlet"
        assert abs(doc["witness"] + 0.0625) < 1e-12
        assert doc["entangled"] is True
        assert set(doc["moments"]) == {"direct", "collective", "invariants"}
        assert doc["max_moment_deviation"] < 1e-10

    def test_separable_werner_not_entangled(self, capsys):
        code, out, _ = run(capsys, "--command", "report", "--state", "werner:0.3")
        assert code == 0
        doc = json.loads(out)
        assert doc["entangled"] is False
        assert doc["w"] == 0.0

    def test_state_file_roundtrip(self, capsys, tmp_path):
        path = tmp_path / "w8.json"
        save_state(path, werner(0.8))
        code, out, _ = run(capsys, "--command", "report", "--state", str(path))
        assert code == 0
        doc = json.loads(out)
        assert abs(doc["witness"] - (-0.03189375)) < 1e-12

    def test_invalid_state_file_is_a_validation_failure(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        save_state(path, 0.9 * np.eye(4) / 4)  # trace 0.9
        code, _, err = run(capsys, "--command", "report", "--state", str(path))
        assert code == 1
        assert "trace" in err

    def test_malformed_file_is_a_usage_error(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "--command", "report", "--state", str(path))
        assert code == 2
        assert "could not read" in err

    def test_unknown_name_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "--command", "report", "--state", "bogus")
        assert code == 2
        assert "neither a known name nor an existing file" in err

    def test_missing_state_flag(self, capsys):
        code, _, err = run(capsys, "--command", "report")
        assert code == 2
        assert "--state is required" in err

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "--command", "report", "--state", "phi_plus", "--out", str(path)
        )
        assert code == 0 and out == ""
        doc = json.loads(path.read_text())
        assert abs(doc["witness"] + 0.0625) < 1e-12


class TestScatter:
    def test_header_and_row_count(self, capsys):
        code, out, _ = run(
            capsys, "--command", "scatter", "--samples", "20", "--seed", "5"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "w,negativity,concurrence"
        assert len(lines) == 21

    def test_byte_identical_reruns(self, capsys):
        _, out1, _ = run(capsys, "--command", "scatter", "--samples", "10", "--seed", "5")
        _, out2, _ = run(capsys, "--command", "scatter", "--samples", "10", "--seed", "5")
        assert out1 == out2

    def test_rows_satisfy_bound_chain(self, capsys):
        code, out, _ = run(
            capsys, "--command", "scatter", "--samples", "200", "--seed", "17"
        )
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            w, n, c = map(float, line.split(","))
            lo, hi = bounds(w)
            assert lo - 1e-9 <= n <= c + 1e-9
            assert c <= hi + 1e-9

    def test_pure_ensemble_saturates_upper_bound(self, capsys):
        code, out, _ = run(
            capsys,
            "--command", "scatter",
            "--ensemble", "pure",
            "--samples", "100",
            "--seed", "23",
        )
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            w, n, c = map(float, line.split(","))
            assert abs(c - w**0.25) < 1e-9
            assert abs(n - c) < 1e-9  # pure states: N = C

    def test_seed_is_required(self, capsys):
        code, _, err = run(capsys, "--command", "scatter", "--samples", "3")
        assert code == 2
        assert "--seed" in err

    def test_json_format_not_supported(self, capsys):
        code, _, err = run(
            capsys, "--command", "scatter", "--samples", "2", "--seed", "1",
            "--format", "json",
        )
        assert code == 2


class TestVerify:
    def test_default_suite_passes(self, capsys):
        code, out, _ = run(
            capsys, "--command", "verify", "--samples", "25", "--seed", "2"
        )
        assert code == 0
        assert "overall: PASS" in out
        assert out.count("PASS") >= 8
        assert "FAIL" not in out
        assert "count 7" in out
        assert "[1.0, 4.0]" in out and "[0.0, 2.0, 4.0]" in out

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "--command", "verify", "--samples", "10", "--seed", "4")
        _, out2, _ = run(capsys, "--command", "verify", "--samples", "10", "--seed", "4")
        assert out1 == out2


class TestSimulate:
    def test_reference_run(self, capsys):
        code, out, _ = run(
            capsys,
            "--command", "simulate",
            "--state", "werner:0.8",
            "--shots", "30000",
            "--seed", "11",
            "--bootstrap", "400",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["shots"] == 30000
        assert doc["estimate"]["shots_per_moment"] == {"2": 10000, "3": 10000, "4": 10000}
        assert abs(doc["true_witness"] - (-0.03189375)) < 1e-12
        assert doc["ci_covers_truth"] is True
        assert doc["estimate"]["ci_low"] < doc["estimate"]["witness_hat"] < doc["estimate"]["ci_high"]

    def test_deterministic_under_seed(self, capsys):
        args = (
            "--command", "simulate", "--state", "werner:0.6",
            "--shots", "3000", "--seed", "8", "--bootstrap", "100",
        )
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_split_allocates_budget(self, capsys):
        code, out, _ = run(
            capsys,
            "--command", "simulate",
            "--state", "werner:0.8",
            "--shots", "4000",
            "--split", "1,1,2",
            "--seed", "3",
            "--bootstrap", "50",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["estimate"]["shots_per_moment"] == {"2": 1000, "3": 1000, "4": 2000}

    def test_budget_must_cover_every_moment(self, capsys):
        code, _, err = run(
            capsys,
            "--command", "simulate",
            "--state", "singlet",
            "--shots", "2",
            "--seed", "0",
        )
        assert code == 2
        assert "starves" in err

    def test_shots_and_seed_required(self, capsys):
        code, _, err = run(
            capsys, "--command", "simulate", "--state", "singlet", "--seed", "1"
        )
        assert code == 2 and "--shots" in err
        code, _, err = run(
            capsys, "--command", "simulate", "--state", "singlet", "--shots", "100"
        )
        assert code == 2 and "--seed" in err


def test_unknown_command_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--command", "transmogrify"])
    assert exc.value.code == 2
