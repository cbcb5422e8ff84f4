"""
Deterministic trial execution.

Each trial draws from its own generator seeded by (seed, property, index),
so results do not depend on worker count or completion order.
"""

from __future__ import annotations

import math
import zlib
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

import numpy as np

from src.config.defaults import TrialConfig, get_tolerances, set_tolerances
from src.errors import ConnectionsError
from src.generators import PsdGenerator
from src.matcore import HermitianMatrix, PsdMatrix, format_matrix
from src.utilities.metrics import ResidualCollector, TrialRecord
from src.utilities.reporting import VerifyReport

TrialFn = Callable[[int, PsdGenerator], TrialRecord]


def trial_generator(seed: int, name: str, index: int) -> PsdGenerator:
    sequence = np.random.SeedSequence([seed, zlib.crc32(name.encode()), index])
    return PsdGenerator(np.random.default_rng(sequence))


def trial_dim(cfg: TrialConfig, index: int) -> int:
    dims = cfg.dims
    return dims[index % len(dims)]


PAIR_KINDS = ("invertible", "one singular", "both singular")


def trial_pair(gen: PsdGenerator, dim: int, index: int) -> tuple[PsdMatrix, PsdMatrix, str]:
    """Operands for a trial, cycling through the PAIR_KINDS by index."""
    kind = PAIR_KINDS[index % len(PAIR_KINDS)]
    if kind == "both singular":
        A, B = gen.singular_pair(dim)
    else:
        A, B = gen.pair(dim, singular=kind == "one singular")
    return A, B, kind


def witness(**matrices: HermitianMatrix | str) -> dict[str, str]:
    """Serialize matrices (or spec strings) for a failure report."""
    return {
        key: value if isinstance(value, str) else format_matrix(value)
        for key, value in matrices.items()
    }


@contextmanager
def applied_tolerances(cfg: TrialConfig) -> Iterator[None]:
    """Install the run's tolerances for the duration of a check."""
    previous = get_tolerances()
    set_tolerances(cfg.tolerances())
    try:
        yield
    finally:
        set_tolerances(previous)


def run_trials(
    name: str,
    anchor: str,
    cfg: TrialConfig,
    trial: TrialFn,
    count: int | None = None,
    collector: ResidualCollector | None = None,
) -> VerifyReport:
    """Run ``count`` trials (default cfg.trials) and reduce them to a report."""
    collector = collector or ResidualCollector()
    total = cfg.trials if count is None else count

    def one(index: int) -> None:
        try:
            record = trial(index, trial_generator(cfg.seed, name, index))
        except ConnectionsError as exc:
            record = TrialRecord(
                index, math.inf, False, {"error": f"{type(exc).__name__}: {exc}"}
            )
        collector.record(name, record)

    with applied_tolerances(cfg):
        if cfg.workers > 1:
            with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
                list(pool.map(one, range(total)))
        else:
            for index in range(total):
                one(index)

    snap = collector.snapshot(name)
    failure = snap.first_failure
    details = f"{snap.failures} of {snap.trials} trials failed" if snap.failures else ""
    if failure is not None and failure.note:
        details = f"{details}; first failure: {failure.note}"
    return VerifyReport(
        property=name,
        anchor=anchor,
        passed=snap.passed,
        worst_residual=snap.worst_residual,
        trials=snap.trials,
        witness=failure.witness if failure is not None else None,
        details=details,
    )
