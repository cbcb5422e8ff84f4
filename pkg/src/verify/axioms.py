"""
Checks of the three connection axioms on random PSD instances.

    monotonicity           A <= C, B <= D  implies  A s B <= C s D
    transformer            C (A s B) C <= (C A C) s (C B C), equality for invertible C
    continuity from above  A_n, B_n decreasing to A, B  implies  A_n s B_n decreasing to A s B
"""

from __future__ import annotations

from src.config.defaults import TrialConfig, get_tolerances
from src.connections import Connection, loewner_residual, representing_measure
from src.errors import ConnectionsError
from src.generators import PsdGenerator
from src.matcore import PsdMatrix, congruence, operator_norm
from src.utilities.metrics import TrialRecord
from src.utilities.reporting import VerifyReport
from src.verify.fixtures import BROKEN_FIXTURES, Evaluable
from src.verify.trials import applied_tolerances, run_trials, trial_dim, trial_pair, witness

MONOTONICITY = "A <= C, B <= D implies A s B <= C s D"
TRANSFORMER = "C (A s B) C <= (CAC) s (CBC), with equality for invertible C"
CONTINUITY = "A_n decreasing to A, B_n decreasing to B implies A_n s B_n decreasing to A s B"
SOUNDNESS = "broken operations fail the monotonicity and transformer checks"

CONTINUITY_STEPS = 20
# singular pairs under a connection with no Lipschitz bound at 0: the residual must at
# least halve between the first and last step
CONTINUITY_CONTRACTION = 0.5


def check_monotonicity(sigma: Evaluable, cfg: TrialConfig) -> VerifyReport:
    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        dim = trial_dim(cfg, index)
        A, B, kind = trial_pair(gen, dim, index)
        C = A + gen.increment(dim)
        D = B + gen.increment(dim)
        lhs, rhs = sigma.evaluate(A, B), sigma.evaluate(C, D)
        scale = 1.0 + operator_norm(lhs) + operator_norm(rhs)
        residual = loewner_residual(lhs, rhs) / scale
        passed = residual <= get_tolerances().loewner_tol
        return TrialRecord(
            index,
            residual,
            passed,
            None if passed else witness(A=A, B=B, C=C, D=D),
            "" if passed else f"dim {dim}, {kind} pair, Loewner gap {residual:.3e}",
        )

    return run_trials(f"monotonicity[{sigma.label}]", MONOTONICITY, cfg, trial)


def _transformer_matrix(gen: PsdGenerator, dim: int, index: int) -> tuple[PsdMatrix, bool]:
    if index == 0:
        return PsdMatrix.identity(dim), True
    kind = index % 3
    if kind == 0:
        return gen.invertible(dim, floor=0.5), True
    if kind == 1:
        return gen.projection(dim, int(gen.rng.integers(0, dim))), False
    return gen.singular(dim), False


def check_transformer(sigma: Evaluable, cfg: TrialConfig) -> VerifyReport:
    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        tol = get_tolerances()
        dim = trial_dim(cfg, index)
        A, B, kind = trial_pair(gen, dim, index // 3)
        C, invertible = _transformer_matrix(gen, dim, index)
        lhs = congruence(C, sigma.evaluate(A, B))
        rhs = sigma.evaluate(congruence(C, A), congruence(C, B))
        scale = 1.0 + operator_norm(lhs) + operator_norm(rhs)
        residual = loewner_residual(lhs, rhs) / scale
        passed = residual <= tol.loewner_tol
        if invertible:
            gap = operator_norm(lhs - rhs) / scale
            residual = max(residual, gap)
            passed = passed and gap <= tol.equality_tol
        return TrialRecord(
            index,
            residual,
            passed,
            None if passed else witness(A=A, B=B, C=C),
            ""
            if passed
            else f"dim {dim}, {kind} pair, invertible C: {invertible}, gap {residual:.3e}",
        )

    return run_trials(f"transformer[{sigma.label}]", TRANSFORMER, cfg, trial)


def _lipschitz_at_zero(sigma: Evaluable) -> bool:
    """True for connections with an atomic representing measure."""
    if not isinstance(sigma, Connection):
        return False
    try:
        return representing_measure(sigma).is_atomic
    except ConnectionsError:
        return False


def check_continuity_from_above(sigma: Evaluable, cfg: TrialConfig) -> VerifyReport:
    """A_n = A + 2^-n I, B_n = B + 2^-n I for n = 1..20.

    The sequence must be nonincreasing in Loewner order and reach the limit
    within continuity_residual_tol at n = 20. Connections whose representing
    function has unbounded slope at 0 (geometric, logarithmic) converge on
    singular pairs at rates as slow as 1/log(1/eps), so there they only have to
    contract.
    """
    lipschitz = _lipschitz_at_zero(sigma)

    def trial(index: int, gen: PsdGenerator) -> TrialRecord:
        tol = get_tolerances()
        dim = trial_dim(cfg, index)
        A, B, kind = trial_pair(gen, dim, index)
        limit = sigma.evaluate(A, B)
        scale = 1.0 + operator_norm(A) + operator_norm(B)

        previous = None
        monotone_gap = 0.0
        residuals = []
        for n in range(1, CONTINUITY_STEPS + 1):
            shift = PsdMatrix.scalar(2.0**-n, dim)
            value = sigma.evaluate(A + shift, B + shift)
            if previous is not None:
                monotone_gap = max(monotone_gap, loewner_residual(value, previous))
            residuals.append(operator_norm(value - limit))
            previous = value

        floor = tol.continuity_residual_tol * scale
        if kind != "invertible" and not lipschitz:
            converged = residuals[-1] <= CONTINUITY_CONTRACTION * residuals[0] + floor
        else:
            converged = residuals[-1] <= floor
        monotone = monotone_gap <= tol.continuity_monotone_tol * scale
        passed = converged and monotone
        return TrialRecord(
            index,
            max(monotone_gap, residuals[-1]) / scale,
            passed,
            None if passed else witness(A=A, B=B),
            ""
            if passed
            else f"dim {dim}, {kind} pair, monotone gap {monotone_gap:.3e}, "
            f"final residual {residuals[-1]:.3e}",
        )

    return run_trials(f"continuity_from_above[{sigma.label}]", CONTINUITY, cfg, trial)


def check_harness_soundness(cfg: TrialConfig) -> VerifyReport:
    """Every broken fixture must fail both checks with a witness."""
    small = cfg.model_copy(update={"trials": min(cfg.trials, 50)})
    caught, missed = 0, []
    with applied_tolerances(cfg):
        for fixture in BROKEN_FIXTURES:
            for check in (check_monotonicity, check_transformer):
                report = check(fixture, small)
                if not report.passed and report.witness:
                    caught += 1
                else:
                    missed.append(report.property)
    passed = not missed
    return VerifyReport(
        property="harness_soundness",
        anchor=SOUNDNESS,
        passed=passed,
        worst_residual=float(len(missed)),
        trials=caught + len(missed),
        witness=None if passed else {"undetected": "\n".join(missed)},
        details=f"{caught} broken checks detected",
    )
