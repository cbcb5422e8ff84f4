"""
Loewner-matrix screen sanity check.
"""

from __future__ import annotations

from src.config.defaults import TrialConfig
from src.monotone import loewner_check
from src.utilities.reporting import VerifyReport
from src.verify.fixtures import SCREEN_FUNCTIONS
from src.verify.trials import applied_tolerances

SCREEN = "operator monotone functions have PSD Loewner matrices on every grid"


def check_loewner_screen(cfg: TrialConfig) -> VerifyReport:
    """Powers, logmean and moebius pass; x^2 and exp are rejected on the default grid."""
    mismatches = []
    worst = 0.0
    with applied_tolerances(cfg):
        for f, expected in SCREEN_FUNCTIONS:
            verdict = loewner_check(f)
            if verdict.is_monotone_candidate != expected:
                mismatches.append(f"{f.label}: candidate={verdict.is_monotone_candidate}")
            if expected and verdict.matrix_norm > 0:
                worst = max(worst, -verdict.min_loewner_eigenvalue / verdict.matrix_norm)
    passed = not mismatches
    return VerifyReport(
        property="loewner_screen",
        anchor=SCREEN,
        passed=passed,
        worst_residual=max(worst, 0.0),
        trials=len(SCREEN_FUNCTIONS),
        witness=None if passed else {"mismatches": "\n".join(mismatches)},
        details=f"{len(SCREEN_FUNCTIONS) - len(mismatches)}/{len(SCREEN_FUNCTIONS)} as expected",
    )
