"""Property-test harness for the connection axioms, norms, isometry and mean claims."""

from src.verify.axioms import (
    check_continuity_from_above,
    check_harness_soundness,
    check_monotonicity,
    check_transformer,
)
from src.verify.fixtures import (
    BROKEN_FIXTURES,
    BROKEN_PRODUCT,
    BROKEN_SQUARE,
    CATALOG,
    CATALOG_MEANS,
    ORDERED_PAIRS,
    BrokenFixture,
)
from src.verify.isometry import (
    check_isometry,
    check_measure_order_counterexample,
    check_route_agreement,
)
from src.verify.means import (
    ConvergenceFixture,
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
from src.verify.suite import CHECKS, run_suite
from src.verify.trials import run_trials, trial_generator

__all__ = [
    "BROKEN_FIXTURES",
    "BROKEN_PRODUCT",
    "BROKEN_SQUARE",
    "CATALOG",
    "CATALOG_MEANS",
    "CHECKS",
    "ORDERED_PAIRS",
    "BrokenFixture",
    "ConvergenceFixture",
    "check_continuity_from_above",
    "check_convergence_equivalence",
    "check_faithfulness",
    "check_harness_soundness",
    "check_isometry",
    "check_loewner_screen",
    "check_mean_limit",
    "check_mean_tfae",
    "check_measure_order_counterexample",
    "check_monotonicity",
    "check_norm_axioms",
    "check_norm_bound",
    "check_norm_forms",
    "check_route_agreement",
    "check_transformer",
    "default_convergence_fixtures",
    "run_suite",
    "run_trials",
    "trial_generator",
]
