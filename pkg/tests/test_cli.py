"""End-to-end tests of the ka command line and the report script."""

import json
import sys

import numpy as np
import pytest

from scripts import generate_report
from scripts.cli import cli_eval, main
from src.matcore import load_matrix, parse_matrix

pytestmark = pytest.mark.integration


@pytest.fixture
def matrix_files(tmp_path):
    files = {
        "one": "dim 1\n1\n",
        "three": "dim 1\n3\n",
        "pair": "dim 2\n2 0.5\n0.5 1\n",
        "other": "dim 2\n1 -0.3\n-0.3 3\n",
        "negative": "dim 1\n-1\n",
        "garbled": "dim 2\n1 2\n",
    }
    paths = {}
    for name, text in files.items():
        paths[name] = tmp_path / f"{name}.txt"
        paths[name].write_text(text)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_harmonic(self, capsys, matrix_files):
        code, out, _ = run(
            capsys,
            "eval",
            "--spec", "mean harmonic",
            "--A", str(matrix_files["one"]),
            "--B", str(matrix_files["three"]),
        )
        assert code == 0
        assert out == "dim 1\n1.5\n"

    def test_out_file(self, capsys, matrix_files, tmp_path):
        target = tmp_path / "result.txt"
        code, out, _ = run(
            capsys,
            "eval",
            "--spec", "mean geometric",
            "--A", str(matrix_files["pair"]),
            "--B", str(matrix_files["other"]),
            "--out", str(target),
        )
        assert code == 0
        assert out == ""
        G = load_matrix(target).entries
        A = load_matrix(matrix_files["pair"]).entries
        B = load_matrix(matrix_files["other"]).entries
        np.testing.assert_allclose(G @ np.linalg.inv(A) @ G, B, atol=1e-9)

    def test_measure_file_relative_to_cwd(self, capsys, matrix_files, tmp_path, monkeypatch):
        (tmp_path / "h.txt").write_text("atom 1 1\n")
        monkeypatch.chdir(tmp_path)
        code, out, _ = run(
            capsys, "eval", "--spec", "measure h.txt", "--A", "one.txt", "--B", "three.txt"
        )
        assert code == 0
        assert out == "dim 1\n1.5\n"

    def test_console_wrapper_injects_command(self, capsys, matrix_files, monkeypatch):
        monkeypatch.setattr(
            sys,
            "argv",
            [
                "ka-eval",
                "--spec", "mean arithmetic",
                "--A", str(matrix_files["one"]),
                "--B", str(matrix_files["three"]),
            ],
        )
        assert cli_eval() == 0
        assert capsys.readouterr().out == "dim 1\n2\n"


class TestSmallCommands:
    def test_norm(self, capsys):
        assert run(capsys, "norm", "--spec", "scale 3 mean harmonic")[:2] == (0, "3.000000000000\n")

    def test_convert_function(self, capsys):
        assert run(capsys, "convert", "--spec", "mean harmonic")[:2] == (0, "moebius 1\n")

    def test_convert_measure(self, capsys):
        code, out, _ = run(capsys, "convert", "--spec", "mean arithmetic", "--to", "measure")
        assert (code, out) == (0, "atom0 0.5\natomInf 0.5\n")

    def test_convert_round_trip(self, capsys, matrix_files, tmp_path, monkeypatch):
        code, out, _ = run(capsys, "convert", "--spec", "mean geometric", "--to", "measure")
        assert code == 0
        (tmp_path / "g.txt").write_text(out)
        monkeypatch.chdir(tmp_path)

        results = []
        for spec in ("mean geometric", "measure g.txt"):
            argv = ["eval", "--spec", spec, "--A", "pair.txt", "--B", "other.txt"]
            code, out, _ = run(capsys, *argv)
            assert code == 0
            results.append(parse_matrix(out).entries)
        np.testing.assert_allclose(results[1], results[0], atol=1e-7)

    def test_catalog(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        names = [line.split()[0] for line in out.splitlines() if not line.startswith(" ")]
        assert names == ["arithmetic", "geometric", "harmonic", "parallel_sum", "logarithmic"]
        assert "  function: moebius 1" in out


class TestExitCodes:
    def test_malformed_spec(self, capsys):
        code, _, err = run(capsys, "norm", "--spec", "mean median")
        assert code == 2
        assert err.startswith("error: SpecParseError:")

    def test_malformed_matrix(self, capsys, matrix_files):
        code, _, _ = run(
            capsys,
            "eval",
            "--spec", "mean arithmetic",
            "--A", str(matrix_files["garbled"]),
            "--B", str(matrix_files["pair"]),
        )
        assert code == 2

    def test_dimension_mismatch(self, capsys, matrix_files):
        code, _, err = run(
            capsys,
            "eval",
            "--spec", "mean arithmetic",
            "--A", str(matrix_files["one"]),
            "--B", str(matrix_files["pair"]),
        )
        assert code == 3
        assert "DimensionMismatch" in err

    def test_not_psd(self, capsys, matrix_files):
        code, _, _ = run(
            capsys,
            "eval",
            "--spec", "mean geometric",
            "--A", str(matrix_files["negative"]),
            "--B", str(matrix_files["one"]),
        )
        assert code == 4

    @pytest.mark.parametrize(
        "flags",
        [["--trials", "0"], ["--tol", "bogus=1"], ["--dims", "3:1"], ["--dims", "x"]],
    )
    def test_bad_verify_flags(self, capsys, tmp_path, flags):
        code, _, err = run(capsys, "verify", "screens", "--out", str(tmp_path / "v.txt"), *flags)
        assert code == 2
        assert err.startswith("error:")
        assert not (tmp_path / "v.txt").exists()


class TestVerify:
    def test_screens_are_reproducible(self, capsys, tmp_path):
        argv = ["verify", "screens", "--trials", "5", "--dims", "1:2", "--quiet"]
        first, second = tmp_path / "a" / "v.txt", tmp_path / "b" / "v.txt"
        assert run(capsys, *argv, "--out", str(first))[0] == 0
        assert run(capsys, *argv, "--out", str(second))[0] == 0

        assert first.read_bytes() == second.read_bytes()
        assert (first.parent / "v.json").read_bytes() == (second.parent / "v.json").read_bytes()
        assert len(list(first.parent.glob("run-metadata-*.json"))) == 1

    def test_trial_settings_from_environment(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("KA_TRIALS", "4")
        monkeypatch.setenv("KA_SEED", "11")
        out = tmp_path / "v.txt"
        assert run(capsys, "verify", "screens", "--out", str(out), "--quiet")[0] == 0
        summary = json.loads(out.with_suffix(".json").read_text())
        assert summary["seed"] == 11
        assert summary["config"]["trials"] == 4

        argv = ["verify", "screens", "--out", str(out), "--trials", "2", "--quiet"]
        assert run(capsys, *argv)[0] == 0
        summary = json.loads(out.with_suffix(".json").read_text())
        assert summary["config"]["trials"] == 2

    def test_csv_format(self, capsys, tmp_path):
        out = tmp_path / "v.csv"
        code, stdout, _ = run(
            capsys, "verify", "screens", "--format", "csv", "--out", str(out), "--quiet"
        )
        assert code == 0
        assert stdout.startswith("PASS screens")
        assert out.read_text().splitlines()[1].startswith("loewner_screen,")

    def test_combined_report(self, capsys, tmp_path, monkeypatch):
        run(capsys, "verify", "screens", "--out", str(tmp_path / "v.txt"), "--quiet")
        monkeypatch.setattr(
            sys, "argv", ["ka-report", "--reports-dir", str(tmp_path), "--format", "md"]
        )
        assert generate_report.main() == 0
        assert "loewner_screen" in (tmp_path / "combined" / "index.md").read_text()

    def test_combined_report_without_runs(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["ka-report", "--reports-dir", str(tmp_path)])
        assert generate_report.main() == 1
