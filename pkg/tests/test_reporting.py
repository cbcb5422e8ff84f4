"""Tests for residual collection, report rendering and the run harness."""

import json

import pytest

from src.config.defaults import TrialConfig
from src.utilities.harness import VerificationHarness, create_run_id
from src.utilities.metrics import ResidualCollector, TrialRecord
from src.utilities.reporting import ReportWriter, RunSummary, VerifyReport, summary_path_for

pytestmark = pytest.mark.unit


def make_summary(passed: bool = True) -> RunSummary:
    reports = [
        VerifyReport("monotonicity[geometric]", "A <= C, B <= D", True, 1.5e-16, 20),
        VerifyReport(
            "transformer[broken_square]",
            "C (A s B) C <= (CAC) s (CBC)",
            passed,
            0.25,
            20,
            witness=None if passed else {"A": "dim 1\n2\n"},
        ),
    ]
    return RunSummary(run_id="ka-test", suite="axioms", seed=1, reports=reports)


class TestResidualCollector:
    def test_snapshot_is_order_independent(self):
        collector = ResidualCollector()
        for index in (4, 1, 3, 0, 2):
            passed = index not in (1, 3)
            collector.record("p", TrialRecord(index, index / 10, passed, {"i": str(index)}))
        snap = collector.snapshot("p")
        assert snap.trials == 5
        assert snap.failures == 2
        assert snap.worst_residual == 0.4
        assert snap.first_failure.index == 1
        assert not snap.passed

    def test_empty_property_does_not_pass(self):
        assert not ResidualCollector().snapshot("missing").passed

    def test_records_are_keyed_by_index(self):
        collector = ResidualCollector()
        collector.record("p", TrialRecord(0, 0.5, True))
        collector.record("p", TrialRecord(0, 0.1, True))
        snap = collector.snapshot("p")
        assert snap.trials == 1
        assert snap.worst_residual == 0.1


class TestReportWriter:
    def test_failed_report_gets_a_witness(self):
        report = VerifyReport("p", "claim", False, 1.0, 3, details="broken")
        assert report.witness == {"note": "broken"}

    def test_text(self):
        text = ReportWriter().render_text(make_summary(passed=False))
        assert text.startswith("run: ka-test\nsuite: axioms\nseed: 1\n")
        assert "[PASS] monotonicity[geometric]" in text
        assert "[FAIL] transformer[broken_square]" in text
        assert "      dim 1\n      2\n" in text
        assert text.endswith("result: FAIL (1/2 properties)\n")

    def test_csv(self):
        lines = ReportWriter().render_csv(make_summary()).splitlines()
        assert lines[0] == "property,anchor,trials,worst_residual,pass"
        assert lines[1] == 'monotonicity[geometric],"A <= C, B <= D",20,1.500000e-16,true'
        assert len(lines) == 3

    def test_json(self):
        data = json.loads(ReportWriter().render_json(make_summary(passed=False)))
        assert data["pass_fail"] == "FAIL"
        assert data["failures"] == 1
        assert data["properties"] == 2

    @pytest.mark.parametrize("fmt, suffix", [("text", ".txt"), ("csv", ".csv")])
    def test_write_pairs_report_with_summary(self, tmp_path, fmt, suffix):
        path = tmp_path / "out" / f"report{suffix}"
        written = ReportWriter(tmp_path).write(make_summary(), path, fmt)
        assert written == path
        assert path.exists()
        assert summary_path_for(path) == tmp_path / "out" / "report.json"
        assert json.loads(summary_path_for(path).read_text())["pass_fail"] == "PASS"

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError, match="Unknown report format"):
            ReportWriter(tmp_path).write(make_summary(), tmp_path / "r.txt", "xml")

    def test_combined_markdown(self, tmp_path):
        writer = ReportWriter(tmp_path)
        summaries = [make_summary().to_dict(), make_summary(passed=False).to_dict()]
        path = writer.generate_combined_report(summaries, fmt="md")
        assert path == tmp_path / "combined" / "index.md"
        content = path.read_text()
        assert "Total runs: 2" in content
        assert "| transformer[broken_square] | 20 | 2.500000e-01 | FAIL |" in content

    def test_combined_html_escapes(self, tmp_path):
        path = ReportWriter(tmp_path).generate_combined_report([make_summary().to_dict()])
        assert "A &lt;= C, B &lt;= D" in path.read_text()


class TestHarness:
    def test_run_id_is_deterministic(self):
        assert create_run_id("axioms", 1) == create_run_id("axioms", 1)
        assert create_run_id("axioms", 1) != create_run_id("axioms", 2)
        assert create_run_id("axioms", 1).startswith("ka-")

    def test_env_run_id_wins(self, monkeypatch):
        monkeypatch.setenv("KA_RUN_ID", "ka-custom")
        assert VerificationHarness("screens", TrialConfig(), verbose=False).run_id == "ka-custom"

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="Unknown suite"):
            VerificationHarness("nope", TrialConfig())

    def test_run_and_write(self, tmp_path, capsys):
        cfg = TrialConfig(trials=5, dim_hi=2, seed=3)
        harness = VerificationHarness("screens", cfg)
        summary = harness.run()
        assert summary.passed
        assert "[OK] loewner_screen" in capsys.readouterr().out

        report = harness.write(summary, tmp_path / "verify-screens.txt")
        assert report.read_text().endswith("result: PASS (1/1 properties)\n")

        meta_path = harness.write_run_metadata(tmp_path)
        metadata = json.loads(meta_path.read_text())
        assert meta_path.name == f"run-metadata-{harness.run_id}.json"
        assert metadata["checks"] == ["loewner_screen"]
        assert metadata["tolerances"]["loewner_screen_tol"] == 1e-8
        assert "workers" not in metadata["config"]
