"""
Checks of the characterizations of means, limits of means, and the
equivalence of convergence in the three cones.

Convergence is measured in the norm pseudo-metric d(x, y) = |‖x‖ - ‖y‖|.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from src.config.defaults import TrialConfig, get_tolerances
from src.connections import (
    ARITHMETIC,
    GEOMETRIC,
    HARMONIC,
    Connection,
    combination,
    conn_scale,
    connection_norm,
    evaluate,
    is_mean,
    normalize,
    representing_function,
    representing_measure,
)
from src.matcore import operator_norm
from src.measures import total_mass
from src.monotone import omf_norm
from src.utilities.reporting import VerifyReport
from src.verify.trials import applied_tolerances, trial_dim, trial_generator

MEAN_TFAE = "A s A = A for all A, ‖s‖ = 1, ‖A s A‖ = ‖A‖ for all A or one A > 0 agree"
MEAN_LIMIT = "a limit of means is a mean"
CONVERGENCE = "s_n -> s  iff  f_n -> f  iff  mu_n -> mu"

MEAN_SAMPLES = 20
PATH_STEPS = tuple(round(0.1 * i, 10) for i in range(11))
NORMALIZE_FACTORS = (0.1, 1.0, 10.0)


def check_mean_tfae(sigma: Connection, cfg: TrialConfig) -> VerifyReport:
    """Compute the four mean conditions independently; they must agree."""
    name = f"mean_tfae[{sigma.label}]"
    samples = min(MEAN_SAMPLES, cfg.trials)
    with applied_tolerances(cfg):
        tol = get_tolerances()
        fixed_point = True
        per_matrix = True
        for index in range(samples):
            gen = trial_generator(cfg.seed, name, index)
            dim = trial_dim(cfg, index)
            A = gen.singular(dim) if index % 4 == 3 else gen.invertible(dim)
            norm_a = operator_norm(A)
            if norm_a == 0.0:
                continue
            value = evaluate(sigma, A, A)
            drift = operator_norm(value - A) / norm_a
            fixed_point = fixed_point and drift <= tol.equality_tol
            ratio_gap = abs(operator_norm(value) - norm_a) / norm_a
            per_matrix = per_matrix and ratio_gap <= tol.norm_form_tol

        norm_condition = is_mean(sigma)

        gen = trial_generator(cfg.seed, name, samples)
        single = gen.invertible(max(cfg.dims))
        single_norm = operator_norm(evaluate(sigma, single, single))
        single_gap = abs(single_norm / operator_norm(single) - 1.0)
        single_condition = single_gap <= tol.norm_form_tol

    conditions = {
        "fixed_point": fixed_point,
        "norm_one": norm_condition,
        "norm_preserving": per_matrix,
        "single_invertible": single_condition,
    }
    agree = len(set(conditions.values())) == 1
    details = ", ".join(f"{key}={value}" for key, value in conditions.items())
    return VerifyReport(
        property=name,
        anchor=MEAN_TFAE,
        passed=agree,
        worst_residual=0.0 if agree else 1.0,
        trials=samples + 2,
        witness=None if agree else {key: str(value) for key, value in conditions.items()},
        details=details,
    )


def check_mean_limit(cfg: TrialConfig) -> VerifyReport:
    """Convex paths between means, constant sequences and normalized ladders stay means."""
    with applied_tolerances(cfg):
        tol = get_tolerances()
        failures = []
        worst = 0.0
        path = [combination([(t, ARITHMETIC), (1.0 - t, HARMONIC)]) for t in PATH_STEPS]
        limit = combination([(0.5, ARITHMETIC), (0.5, HARMONIC)])
        members = path + [limit] + [GEOMETRIC] * 3
        members += [normalize(conn_scale(k, GEOMETRIC)) for k in NORMALIZE_FACTORS]
        for sigma in members:
            gap = abs(connection_norm(sigma).value - 1.0)
            worst = max(worst, gap)
            if gap > tol.norm_form_tol or not is_mean(sigma):
                failures.append(sigma.label)

    passed = not failures
    return VerifyReport(
        property="mean_limit",
        anchor=MEAN_LIMIT,
        passed=passed,
        worst_residual=worst,
        trials=len(members),
        witness=None if passed else {"not_means": "\n".join(failures)},
        details=f"{len(members) - len(failures)}/{len(members)} members are means",
    )


@dataclass(frozen=True)
class ConvergenceFixture:
    label: str
    sequence: tuple[Connection, ...]
    limit: Connection
    # optional bound on the final distances, all three cones
    bound: float | None = None


def default_convergence_fixtures() -> list[ConvergenceFixture]:
    n_max = 50
    return [
        ConvergenceFixture(
            "(1+1/n) harmonic",
            tuple(conn_scale(1.0 + 1.0 / n, HARMONIC) for n in range(1, n_max + 1)),
            HARMONIC,
            bound=2e-2,
        ),
        ConvergenceFixture(
            "(1+1/n) harmonic, n=10^6",
            (conn_scale(1.0 + 1e-6, HARMONIC),),
            HARMONIC,
            bound=1e-6,
        ),
        ConvergenceFixture("constant geometric", (GEOMETRIC,) * n_max, GEOMETRIC),
        ConvergenceFixture(
            "n harmonic",
            tuple(conn_scale(float(n), HARMONIC) for n in range(1, n_max + 1)),
            HARMONIC,
        ),
    ]


def _three_norms(sigma: Connection) -> tuple[float, float, float]:
    return (
        connection_norm(sigma).value,
        omf_norm(representing_function(sigma)),
        total_mass(representing_measure(sigma)),
    )


def _within(value: float, bound: float) -> bool:
    # bounds such as 1/50 are attained exactly by the fixtures
    return value <= bound * (1.0 + 1e-9) + 1e-15


def check_convergence_equivalence(
    sequence: Sequence[Connection],
    limit: Connection,
    cfg: TrialConfig,
    label: str = "sequence",
    bound: float | None = None,
) -> VerifyReport:
    """Distances ‖s_n‖, f_n(1), mu_n([0, inf]) to the limit; verdicts must agree at the end."""
    with applied_tolerances(cfg):
        tol = get_tolerances()
        limits = _three_norms(limit)
        spread = 0.0
        final = (0.0, 0.0, 0.0)
        for sigma in sequence:
            values = _three_norms(sigma)
            final = tuple(abs(v - lv) for v, lv in zip(values, limits, strict=True))
            spread = max(spread, max(final) - min(final))

    verdicts = tuple(_within(d, tol.convergence_tol) for d in final)
    agree = len(set(verdicts)) == 1
    bounded = bound is None or all(_within(d, bound) for d in final)
    passed = agree and bounded
    details = (
        f"final distances connection={final[0]:.6e} function={final[1]:.6e} "
        f"measure={final[2]:.6e}; converged={verdicts[0]}"
    )
    return VerifyReport(
        property=f"convergence_equivalence[{label}]",
        anchor=CONVERGENCE,
        passed=passed,
        worst_residual=spread,
        trials=len(sequence),
        witness=None if passed else {"verdicts": str(verdicts), "limit": limit.label},
        details=details,
    )
