"""
Residual collection for verification trials.

Trials may finish in any order on a thread pool; every record is keyed by
trial index so the snapshot is the same whatever the completion order.
"""

import threading
from dataclasses import dataclass


@dataclass
class TrialRecord:
    """Outcome of a single trial."""

    index: int
    residual: float
    passed: bool
    witness: dict[str, str] | None = None
    note: str = ""


@dataclass
class ResidualSnapshot:
    """Aggregated statistics for one property."""

    name: str
    trials: int = 0
    worst_residual: float = 0.0
    failures: int = 0
    first_failure: TrialRecord | None = None

    @property
    def passed(self) -> bool:
        return self.trials > 0 and self.failures == 0


class ResidualCollector:
    """
    Collects per-trial residuals for verification properties.

    Usage:
        collector = ResidualCollector()
        collector.record("monotonicity[geometric]", TrialRecord(0, 1e-15, True))
        collector.snapshot("monotonicity[geometric]").worst_residual
    """

    def __init__(self):
        self._records: dict[str, dict[int, TrialRecord]] = {}
        self._lock = threading.Lock()

    def record(self, name: str, record: TrialRecord):
        with self._lock:
            self._records.setdefault(name, {})[record.index] = record

    def snapshot(self, name: str) -> ResidualSnapshot:
        """Deterministic reduction: max residual, failure count, lowest-index witness."""
        with self._lock:
            records = dict(self._records.get(name, {}))

        snap = ResidualSnapshot(name=name)
        for index in sorted(records):
            rec = records[index]
            snap.trials += 1
            snap.worst_residual = max(snap.worst_residual, rec.residual)
            if not rec.passed:
                snap.failures += 1
                if snap.first_failure is None:
                    snap.first_failure = rec
        return snap
