"""
CLI script to generate combined verification reports.

Usage:
    uv run ka-report --runs=ka-1a2b3c4d5e6f,ka-0f9e8d7c6b5a --reports-dir=html-reports
    uv run ka-report --format=md
"""

import argparse
import sys
from pathlib import Path

from src.utilities.reporting import ReportWriter


def _is_summary(data: dict) -> bool:
    # run metadata JSON lives in the same directory
    return "run_id" in data and "reports" in data


def find_all_summaries(reports_dir: Path) -> list[dict]:
    """Every run summary under ``reports_dir``, ordered by path."""
    paths = sorted(reports_dir.glob("**/*.json"))
    return [s for s in ReportWriter.load_summaries(paths) if _is_summary(s)]


def select_runs(summaries: list[dict], run_ids: list[str]) -> list[dict]:
    by_id = {s["run_id"]: s for s in summaries}
    selected = []
    for run_id in run_ids:
        if run_id in by_id:
            selected.append(by_id[run_id])
        else:
            print(f"  [WARN] Could not load summary for run {run_id}")
    return selected


def main():
    parser = argparse.ArgumentParser(description="Generate combined verification reports")
    parser.add_argument(
        "--runs",
        type=str,
        default=None,
        help="Comma-separated list of run IDs (default: every summary found)",
    )
    parser.add_argument(
        "--reports-dir",
        type=str,
        default="html-reports",
        help="Directory containing run summary files",
    )
    parser.add_argument("--format", choices=["html", "md"], default="html")

    args = parser.parse_args()

    reports_dir = Path(args.reports_dir)
    summaries = find_all_summaries(reports_dir)
    if args.runs:
        summaries = select_runs(summaries, args.runs.split(","))
    print(f"Found {len(summaries)} runs to include in report")

    if not summaries:
        print("Error: No run summaries found")
        return 1

    output = ReportWriter(reports_dir).generate_combined_report(summaries, fmt=args.format)
    print(f"Report generated: {output}")

    print("\nSummary:")
    for s in summaries:
        print(f"  {s.get('run_id')}: {s.get('pass_fail', 'UNKNOWN')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
