"""
Reporting utilities for verification runs.

Writes the structured text report, the CSV table and a JSON run summary,
and combines run summaries into HTML or Markdown. Nothing time-dependent is
written, so identical (seed, config) runs produce byte-identical files.
"""

import csv
import html
import io
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

CSV_COLUMNS = ["property", "anchor", "trials", "worst_residual", "pass"]


@dataclass
class VerifyReport:
    """Outcome of one verified property."""

    property: str
    anchor: str
    passed: bool
    worst_residual: float
    trials: int
    witness: dict[str, str] | None = None
    details: str = ""

    def __post_init__(self):
        if not self.passed and not self.witness:
            self.witness = {"note": self.details or "no witness recorded"}


@dataclass
class RunSummary:
    """Summary of a verification run."""

    run_id: str
    suite: str
    seed: int
    config: dict = field(default_factory=dict)
    reports: list[VerifyReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failures(self) -> int:
        return sum(not r.passed for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "suite": self.suite,
            "seed": self.seed,
            "config": self.config,
            "properties": len(self.reports),
            "failures": self.failures,
            "pass_fail": "PASS" if self.passed else "FAIL",
            "reports": [asdict(r) for r in self.reports],
        }


def _residual(value: float) -> str:
    return f"{value:.6e}"


def summary_path_for(report_path: Path) -> Path:
    """JSON summary written next to a report file."""
    if report_path.suffix == ".json":
        return report_path.with_name(f"{report_path.stem}-summary.json")
    return report_path.with_suffix(".json")


class ReportWriter:
    """
    Writes verification reports.

    Usage:
        writer = ReportWriter("html-reports")
        writer.write(summary, "report.txt", fmt="text")
    """

    def __init__(self, output_dir: str | Path = "html-reports"):
        self.output_dir = Path(output_dir)

    def render_text(self, summary: RunSummary) -> str:
        lines = [
            f"run: {summary.run_id}",
            f"suite: {summary.suite}",
            f"seed: {summary.seed}",
            "",
        ]
        for report in summary.reports:
            status = "PASS" if report.passed else "FAIL"
            lines.append(f"[{status}] {report.property}")
            lines.append(f"  anchor: {report.anchor}")
            lines.append(f"  trials: {report.trials}")
            lines.append(f"  worst_residual: {_residual(report.worst_residual)}")
            if report.details:
                lines.append(f"  details: {report.details}")
            if not report.passed and report.witness:
                lines.append("  witness:")
                for key in sorted(report.witness):
                    lines.append(f"    {key}:")
                    lines.extend(f"      {row}" for row in report.witness[key].splitlines())
        lines.append("")
        lines.append(
            f"result: {'PASS' if summary.passed else 'FAIL'} "
            f"({len(summary.reports) - summary.failures}/{len(summary.reports)} properties)"
        )
        return "\n".join(lines) + "\n"

    def render_csv(self, summary: RunSummary) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for report in summary.reports:
            writer.writerow(
                [
                    report.property,
                    report.anchor,
                    report.trials,
                    _residual(report.worst_residual),
                    "true" if report.passed else "false",
                ]
            )
        return buffer.getvalue()

    def render_json(self, summary: RunSummary) -> str:
        return json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n"

    def write(self, summary: RunSummary, path: str | Path, fmt: str = "text") -> Path:
        """Write the report at ``path`` and a JSON summary next to it."""
        renderers = {"text": self.render_text, "csv": self.render_csv}
        if fmt not in renderers:
            raise ValueError(f"Unknown report format: {fmt}")
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(renderers[fmt](summary))
        self.write_json_summary(summary, summary_path_for(path))
        return path

    def write_json_summary(self, summary: RunSummary, path: str | Path | None = None) -> Path:
        if path is None:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            path = self.output_dir / f"run-summary-{summary.run_id}.json"
        path = Path(path)
        path.write_text(self.render_json(summary))
        return path

    # combined reports

    @staticmethod
    def load_summaries(paths: list[Path]) -> list[dict]:
        summaries = []
        for path in paths:
            with open(path) as f:
                summaries.append(json.load(f))
        return summaries

    def generate_combined_report(self, summaries: list[dict], fmt: str = "html") -> Path:
        """Combine run summaries into one HTML or Markdown report."""
        suffix = "html" if fmt == "html" else "md"
        output_file = self.output_dir / "combined" / f"index.{suffix}"
        output_file.parent.mkdir(parents=True, exist_ok=True)
        content = (
            self._generate_html_report(summaries)
            if fmt == "html"
            else self._generate_markdown_report(summaries)
        )
        output_file.write_text(content)
        return output_file

    def _generate_markdown_report(self, summaries: list[dict]) -> str:
        lines = ["# Verification Report", "", f"Total runs: {len(summaries)}", ""]
        for s in summaries:
            lines.append(f"## {s.get('run_id', 'N/A')} ({s.get('suite', 'N/A')})")
            lines.append("")
            lines.append("| Property | Trials | Worst residual | Status |")
            lines.append("|---|---|---|---|")
            for r in s.get("reports", []):
                status = "PASS" if r.get("passed") else "FAIL"
                lines.append(
                    f"| {r['property']} | {r['trials']} | "
                    f"{_residual(r['worst_residual'])} | {status} |"
                )
            lines.append("")
        return "\n".join(lines)

    def _generate_html_report(self, summaries: list[dict]) -> str:
        rows = []
        for s in summaries:
            for r in s.get("reports", []):
                row_class = "pass" if r.get("passed") else "fail"
                rows.append(f"""
                <tr class="{row_class}">
                    <td>{html.escape(s.get("run_id", "N/A"))}</td>
                    <td>{html.escape(r["property"])}</td>
                    <td>{html.escape(r["anchor"])}</td>
                    <td>{r["trials"]}</td>
                    <td>{_residual(r["worst_residual"])}</td>
                    <td class="{row_class}">{"PASS" if r.get("passed") else "FAIL"}</td>
                </tr>
            """)

        return f"""
<!DOCTYPE html>
<html>
<head>
    <title>Verification Report</title>
    <style>
        body {{ font-family: Arial, sans-serif; margin: 20px; }}
        table {{ border-collapse: collapse; width: 100%; }}
        th, td {{ border: 1px solid #ddd; padding: 8px; text-align: left; }}
        th {{ background-color: #4CAF50; color: white; }}
        tr:nth-child(even) {{ background-color: #f2f2f2; }}
        .pass {{ color: green; font-weight: bold; }}
        .fail {{ color: red; font-weight: bold; }}
        h1 {{ color: #333; }}
        .summary {{ margin-bottom: 20px; padding: 10px; background-color: #f9f9f9; }}
    </style>
</head>
<body>
    <h1>Verification Report</h1>
    <div class="summary">
        <p>Total Runs: {len(summaries)}</p>
    </div>
    <table>
        <tr>
            <th>Run ID</th>
            <th>Property</th>
            <th>Claim</th>
            <th>Trials</th>
            <th>Worst Residual</th>
            <th>Status</th>
        </tr>
        {"".join(rows)}
    </table>
</body>
</html>
        """
