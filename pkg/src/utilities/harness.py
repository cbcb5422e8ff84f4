"""
Harness for one verification run.

Manages the lifecycle of a run:
1. Derive run_id from (suite, seed)
2. Run the suite's checks, printing one line per property
3. Write the report, JSON summary and run metadata

Usage:
    from src.utilities.harness import VerificationHarness

    harness = VerificationHarness("axioms", cfg)
    summary = harness.run()
    harness.write(summary, "report.txt")
"""

import hashlib
import json
import os
from pathlib import Path

from src.config.defaults import TrialConfig, get_suite_config
from src.utilities.reporting import ReportWriter, RunSummary, VerifyReport


def create_run_id(suite: str, seed: int) -> str:
    """Deterministic run ID, so identical invocations write identical files."""
    digest = hashlib.sha256(f"{suite}:{seed}".encode()).hexdigest()[:12]
    return f"ka-{digest}"


def get_env_run_id() -> str | None:
    """Get run_id from environment variable."""
    return os.getenv("KA_RUN_ID")


class VerificationHarness:
    """
    Runs a verification suite and persists its results.

    The run_id tags every file the run writes.
    """

    def __init__(
        self,
        suite: str,
        cfg: TrialConfig,
        run_id: str | None = None,
        verbose: bool = True,
    ):
        get_suite_config(suite)
        self.suite = suite
        self.cfg = cfg
        self.run_id = run_id or get_env_run_id() or create_run_id(suite, cfg.seed)
        self.verbose = verbose

    def _print(self, message: str = "") -> None:
        if self.verbose:
            print(message)

    def _on_report(self, report: VerifyReport) -> None:
        status = "[OK]" if report.passed else "[FAIL]"
        self._print(f"  {status} {report.property}: worst residual {report.worst_residual:.3e}")

    def run(self) -> RunSummary:
        """Run every check of the suite."""
        from src.verify import run_suite

        self._print(f"\n{'=' * 60}")
        self._print(f"VERIFY {self.suite.upper()} - Run ID: {self.run_id}")
        self._print(f"{'=' * 60}\n")
        self._print(
            f"dims {self.cfg.dim_lo}:{self.cfg.dim_hi}, trials {self.cfg.trials}, "
            f"seed {self.cfg.seed}, workers {self.cfg.workers}"
        )

        reports = run_suite(self.suite, self.cfg, on_report=self._on_report)
        summary = RunSummary(
            run_id=self.run_id,
            suite=self.suite,
            seed=self.cfg.seed,
            config=self.cfg.model_dump(exclude={"workers"}),
            reports=reports,
        )

        self._print(f"\n{'=' * 60}")
        verdict = "PASS" if summary.passed else "FAIL"
        self._print(
            f"RESULT: {verdict} ({len(reports) - summary.failures}/{len(reports)} properties)"
        )
        self._print(f"{'=' * 60}")
        return summary

    def write(self, summary: RunSummary, path: str | Path, fmt: str = "text") -> Path:
        """Write the report (text or CSV) plus its JSON summary."""
        path = Path(path)
        written = ReportWriter(path.parent).write(summary, path, fmt)
        self._print(f"\nReport written to: {written}")
        return written

    def write_run_metadata(
        self,
        output_dir: str | Path = "html-reports",
        metadata: dict | None = None,
    ) -> Path:
        """
        Write run metadata to file for tracking.

        Args:
            output_dir: Directory for metadata file
            metadata: Extra keys merged into the metadata

        Returns:
            Path to metadata file
        """
        output_path = Path(output_dir)
        output_path.mkdir(parents=True, exist_ok=True)

        base_metadata = {
            "run_id": self.run_id,
            "suite": self.suite,
            "checks": get_suite_config(self.suite)["checks"],
            "config": self.cfg.model_dump(exclude={"workers"}),
            "tolerances": {
                key: list(value) if isinstance(value, tuple) else value
                for key, value in vars(self.cfg.tolerances()).items()
            },
        }
        if metadata:
            base_metadata.update(metadata)

        metadata_file = output_path / f"run-metadata-{self.run_id}.json"
        with open(metadata_file, "w") as f:
            json.dump(base_metadata, f, indent=2, sort_keys=True)
            f.write("\n")

        return metadata_file
