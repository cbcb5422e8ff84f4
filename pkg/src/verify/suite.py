"""
Suite runner: maps the check names in ``SUITES`` to the checks that realize them.

Each registry entry expands to one or more reports (one per catalog connection
where the property is per-connection).
"""

from __future__ import annotations

from collections.abc import Callable

from src.config.defaults import TrialConfig, get_suite_config
from src.connections import PARALLEL_SUM, ZERO_CONNECTION, conn_scale
from src.utilities.reporting import VerifyReport
from src.verify.axioms import (
    check_continuity_from_above,
    check_harness_soundness,
    check_monotonicity,
    check_transformer,
)
from src.verify.fixtures import CATALOG, CATALOG_MEANS
from src.verify.isometry import (
    check_isometry,
    check_measure_order_counterexample,
    check_route_agreement,
)
from src.verify.means import (
    check_convergence_equivalence,
    check_mean_limit,
    check_mean_tfae,
    default_convergence_fixtures,
)
from src.verify.norms import (
    check_faithfulness,
    check_norm_axioms,
    check_norm_bound,
    check_norm_forms,
)
from src.verify.screens import check_loewner_screen

CheckFn = Callable[[TrialConfig], list[VerifyReport]]

ROUTE_AGREEMENT_FORMS = ("arithmetic", "harmonic", "parallel_sum", "geometric")
MEAN_SCALES = (0.5, 1.0, 2.0)


def _per_catalog(check: Callable[..., VerifyReport]) -> CheckFn:
    return lambda cfg: [check(sigma, cfg) for sigma in CATALOG]


def _single(check: Callable[[TrialConfig], VerifyReport]) -> CheckFn:
    return lambda cfg: [check(cfg)]


def _mean_tfae(cfg: TrialConfig) -> list[VerifyReport]:
    candidates = [conn_scale(k, sigma) for sigma in CATALOG_MEANS for k in MEAN_SCALES]
    candidates += [ZERO_CONNECTION, PARALLEL_SUM]
    return [check_mean_tfae(sigma, cfg) for sigma in candidates]


def _route_agreement(cfg: TrialConfig) -> list[VerifyReport]:
    return [check_route_agreement(name, cfg) for name in ROUTE_AGREEMENT_FORMS]


def _convergence(cfg: TrialConfig) -> list[VerifyReport]:
    return [
        check_convergence_equivalence(f.sequence, f.limit, cfg, f.label, f.bound)
        for f in default_convergence_fixtures()
    ]


CHECKS: dict[str, CheckFn] = {
    "monotonicity": _per_catalog(check_monotonicity),
    "transformer": _per_catalog(check_transformer),
    "continuity_from_above": _per_catalog(check_continuity_from_above),
    "harness_soundness": _single(check_harness_soundness),
    "norm_forms": _per_catalog(check_norm_forms),
    "norm_axioms": _single(check_norm_axioms),
    "norm_bound": _per_catalog(check_norm_bound),
    "faithfulness": _single(check_faithfulness),
    "isometry": _single(check_isometry),
    "route_agreement": _route_agreement,
    "measure_order_counterexample": _single(check_measure_order_counterexample),
    "mean_tfae": _mean_tfae,
    "mean_limit": _single(check_mean_limit),
    "convergence_equivalence": _convergence,
    "loewner_screen": _single(check_loewner_screen),
}


def run_suite(
    suite: str,
    cfg: TrialConfig,
    on_report: Callable[[VerifyReport], None] | None = None,
) -> list[VerifyReport]:
    """Run every check of ``suite`` in registry order.

    ``on_report`` is called as each report completes (used for console progress).
    """
    reports: list[VerifyReport] = []
    for name in get_suite_config(suite)["checks"]:
        if name not in CHECKS:
            raise ValueError(f"Unknown check: {name}")
        for report in CHECKS[name](cfg):
            reports.append(report)
            if on_report is not None:
                on_report(report)
    return reports
