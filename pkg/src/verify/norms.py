"""
Checks of the connection norm: equivalent norm forms, the normed ordered
cone axioms, the scalar norm bound and faithfulness.
"""

from __future__ import annotations

from src.config.defaults import TrialConfig, get_tolerances
from src.connections import (
    ZERO_CONNECTION,
    Connection,
    conn_add,
    conn_leq,
    conn_scale,
    connection_norm,
    evaluate,
    induced_scalar,
    norm_forms,
)
from src.generators import PsdGenerator
from src.matcore import operator_norm
from src.utilities.metrics import TrialRecord
from src.utilities.reporting import VerifyReport
from src.verify.fixtures import CATALOG, CONE_GENERATORS, ORDERED_PAIRS
from src.verify.trials import run_trials, trial_dim, trial_pair, witness

NORM_FORMS = "‖s‖ = sup ‖A s B‖ over unit pairs = ‖A s A‖/‖A‖ (A > 0) = ‖I s I‖"
NORM_AXIOMS = "connections with ‖s‖ = ‖I s I‖ form a normed ordered cone with linear norm"
NORM_BOUND = "‖A s B‖ <= ‖A‖ s~ ‖B‖"
FAITHFULNESS = "‖s‖ = 0 only for the zero connection"

NORM_FORM_SAMPLES_PER_DIM = 50


def check_norm_forms(sigma: Connection, cfg: TrialConfig) -> VerifyReport:
    """|‖A s A‖/‖A‖ - ‖I s I‖| over random invertible A, per dimension."""
    per_dim = min(NORM_FORM_SAMPLES_PER_DIM, cfg.trials)
    dims = list(cfg.dims)

    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        tol = get_tolerances().norm_form_tol
        dim = dims[index // per_dim]
        A = gen.invertible(dim)
        forms = norm_forms(sigma, A, samples=[(gen.invertible(dim), gen.invertible(dim))])
        spread = forms.spread / max(1.0, forms.identity)
        overshoot = max(0.0, forms.pair_sup - forms.identity) / max(1.0, forms.identity)
        residual = max(spread, overshoot)
        passed = residual <= tol
        return TrialRecord(
            index,
            residual,
            passed,
            None if passed else witness(A=A),
            "" if passed else f"dim {dim}, ratio {forms.diagonal_ratio:.12g} "
            f"vs identity {forms.identity:.12g}",
        )

    return run_trials(
        f"norm_forms[{sigma.label}]", NORM_FORMS, cfg, trial, count=per_dim * len(dims)
    )


def check_norm_bound(sigma: Connection, cfg: TrialConfig) -> VerifyReport:
    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        dim = trial_dim(cfg, index)
        A, B, kind = trial_pair(gen, dim, index)
        lhs = operator_norm(evaluate(sigma, A, B))
        rhs = induced_scalar(sigma, operator_norm(A), operator_norm(B))
        scale = 1.0 + operator_norm(A) + operator_norm(B)
        residual = max(0.0, lhs - rhs) / scale
        passed = residual <= get_tolerances().norm_form_tol
        return TrialRecord(
            index,
            residual,
            passed,
            None if passed else witness(A=A, B=B),
            "" if passed else f"{kind} pair: ‖A s B‖ = {lhs:.12g} > {rhs:.12g}",
        )

    return run_trials(f"norm_bound[{sigma.label}]", NORM_BOUND, cfg, trial)


def check_norm_axioms(cfg: TrialConfig) -> VerifyReport:
    """Homogeneity, additivity, order monotonicity and the zero connection."""

    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        tol = get_tolerances()
        dim = trial_dim(cfg, index)
        sigma = CONE_GENERATORS[int(gen.rng.integers(0, len(CONE_GENERATORS)))]
        eta = CONE_GENERATORS[int(gen.rng.integers(0, len(CONE_GENERATORS)))]
        k = float(gen.rng.uniform(0.0, 5.0))
        n_sigma = connection_norm(sigma).value
        n_eta = connection_norm(eta).value

        homogeneity = abs(connection_norm(conn_scale(k, sigma)).value - k * n_sigma)
        homogeneity /= 1.0 + k * n_sigma
        n_sum = connection_norm(conn_add(sigma, eta)).value
        additivity = abs(n_sum - (n_sigma + n_eta)) / (1.0 + n_sigma + n_eta)

        low, high = ORDERED_PAIRS[index % len(ORDERED_PAIRS)]
        k_low = float(gen.rng.uniform(0.1, 1.0))
        k_high = k_low + float(gen.rng.uniform(0.0, 1.0))
        smaller, larger = conn_scale(k_low, low), conn_scale(k_high, high)
        pairs = [gen.pair(dim), gen.pair(dim, singular=True), gen.singular_pair(dim)]
        ordered = conn_leq(smaller, larger, pairs)
        order_gap = max(
            0.0, connection_norm(smaller).value - connection_norm(larger).value
        )

        A, B = gen.pair(dim)
        zero_value = operator_norm(evaluate(ZERO_CONNECTION, A, B))
        zero_norm = connection_norm(ZERO_CONNECTION).value

        residual = max(homogeneity, additivity, order_gap, zero_value, zero_norm)
        passed = ordered and residual <= tol.norm_form_tol
        note = ""
        if not passed:
            note = (
                f"{sigma.label}/{eta.label}: homogeneity {homogeneity:.3e}, "
                f"additivity {additivity:.3e}, order {ordered} gap {order_gap:.3e}, "
                f"zero {zero_value:.3e}"
            )
        return TrialRecord(
            index,
            residual,
            passed,
            None if passed else {"sigma": sigma.label, "eta": eta.label, "k": f"{k!r}"},
            note,
        )

    return run_trials("norm_axioms", NORM_AXIOMS, cfg, trial)


def check_faithfulness(cfg: TrialConfig) -> VerifyReport:
    """The zero connection has norm 0 and vanishes; nonzero catalog connections do not."""

    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        tol = get_tolerances()
        dim = trial_dim(cfg, index)
        A, B, _ = trial_pair(gen, dim, index)
        zero_value = operator_norm(evaluate(ZERO_CONNECTION, A, B))
        sigma = CATALOG[index % len(CATALOG)]
        k = 10.0 ** float(gen.rng.uniform(-6.0, 0.0))
        scaled_norm = connection_norm(conn_scale(k, sigma)).value
        passed = zero_value == 0.0 and scaled_norm > tol.zero_norm
        return TrialRecord(
            index,
            zero_value,
            passed,
            None if passed else witness(A=A, B=B, sigma=sigma.label),
            "" if passed else f"zero evaluates to {zero_value:.3e}, {k:g}*{sigma.label} "
            f"has norm {scaled_norm:.3e}",
        )

    if connection_norm(ZERO_CONNECTION).value != 0.0:
        return VerifyReport(
            property="faithfulness",
            anchor=FAITHFULNESS,
            passed=False,
            worst_residual=connection_norm(ZERO_CONNECTION).value,
            trials=1,
            witness={"sigma": "zero"},
            details="zero connection has nonzero norm",
        )
    return run_trials("faithfulness", FAITHFULNESS, cfg, trial)
