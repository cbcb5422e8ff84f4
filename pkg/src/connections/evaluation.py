"""
Evaluation of connections on PSD pairs.

Singular pairs are first compressed to the support of A + B, where every
connection lives. On the support the primal formula
A^(1/2) f(A^(-1/2) B A^(-1/2)) A^(1/2) is exact when A is invertible, and the
transposed formula B^(1/2) g(B^(-1/2) A B^(-1/2)) B^(1/2) with g(x) = x f(1/x)
is exact when B is. When A is singular on the support, the pair is reduced to
the range of A: with s the shorted operator of B to that range,
A sigma B = (A sigma s) + beta (B - s), beta the slope of f at infinity.
The epsilon-ladder A + eps I, B + eps I is the last resort for functions with
no finite slope.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from functools import partial

import numpy as np
import scipy.linalg

from src.config.defaults import get_tolerances
from src.connections.connection import Connection, Route
from src.errors import ConvergenceFailure, DimensionMismatch, SingularMatrix, UnsupportedInversion
from src.matcore import (
    HermitianMatrix,
    PsdMatrix,
    apply_spectral_psd,
    compress,
    congruence,
    expand,
    inv_psd,
    inv_sqrt_psd,
    is_invertible,
    operator_norm,
    shorted,
    sqrt_psd,
    support_basis,
)
from src.measures import Integrand, RepMeasure, integrate
from src.monotone import LogMean, OMFunction, Power, kernel

PairFormula = Callable[[PsdMatrix, PsdMatrix], PsdMatrix]


def as_psd(M) -> PsdMatrix:
    if isinstance(M, PsdMatrix):
        return M
    if isinstance(M, HermitianMatrix):
        return PsdMatrix.from_hermitian(M)
    return PsdMatrix(M)


def _pair(A, B) -> tuple[PsdMatrix, PsdMatrix]:
    A, B = as_psd(A), as_psd(B)
    if A.dim != B.dim:
        raise DimensionMismatch(f"Dimension mismatch: {A.dim} vs {B.dim}")
    return A, B


def _scale(A: PsdMatrix, B: PsdMatrix) -> float:
    return max(operator_norm(A), operator_norm(B), get_tolerances().abs_floor)


def _condition(M: PsdMatrix) -> float:
    lam = M.eigenvalues
    return float(lam[-1] / lam[0]) if lam[0] > 0 else np.inf


def epsilon_ladder(formula: PairFormula, A: PsdMatrix, B: PsdMatrix) -> PsdMatrix:
    """Limit of formula(A + eps I, B + eps I) over the decreasing ladder of eps.

    The shifts are the rungs times max(||A||, ||B||). A rung is accepted when
    its value differs from the previous one by at most ladder_accept times the
    larger of the two values and the operand scale.
    """
    tol = get_tolerances()
    scale = _scale(A, B)
    previous: PsdMatrix | None = None
    gap = bound = np.inf
    for rung in tol.ladder_rungs:
        shift = PsdMatrix.scalar(rung * scale, A.dim)
        try:
            value = formula(A + shift, B + shift)
        except SingularMatrix as exc:
            raise ConvergenceFailure(f"Epsilon-ladder rung {rung:.0e} is singular: {exc}") from exc
        if previous is not None:
            gap = operator_norm(value - previous)
            bound = tol.ladder_accept * max(operator_norm(value), operator_norm(previous), scale)
            if gap <= bound:
                return value
        previous = value
    raise ConvergenceFailure(
        f"Epsilon-ladder did not stabilize: last step {gap:.3e} (acceptance {bound:.3e})"
    )


def _on_support(
    A: PsdMatrix, B: PsdMatrix, solve: Callable[[PsdMatrix, PsdMatrix], PsdMatrix]
) -> PsdMatrix:
    V = support_basis(A + B)
    if V.shape[1] == 0:
        return PsdMatrix.zeros(A.dim)
    return expand(solve(compress(A, V), compress(B, V)), V)


# parallel sum


def parallel_sum(A: PsdMatrix, B: PsdMatrix) -> PsdMatrix:
    """A : B = (A^-1 + B^-1)^-1, extended to singular pairs by decreasing limits.

    On the support of A + B the limit is A (A + B)^-1 B.
    """
    A, B = _pair(A, B)
    if is_invertible(A) and is_invertible(B):
        return inv_psd(inv_psd(A) + inv_psd(B))
    return _on_support(A, B, _shorted_parallel_sum)


def _shorted_parallel_sum(a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    total = a + b
    x = scipy.linalg.solve(total.entries, b.entries, assume_a="her")
    return PsdMatrix._trusted(a.entries @ x)


def harmonic(A: PsdMatrix, B: PsdMatrix) -> PsdMatrix:
    """A ! B = 2 (A : B)."""
    return parallel_sum(A, B) * 2.0


# functional calculus route


def _rank(M: PsdMatrix) -> int | None:
    """Rank of a singular operand, None when it is invertible."""
    return None if is_invertible(M) else support_basis(M).shape[1]


def _primal(f: OMFunction, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    inner = congruence(inv_sqrt_psd(a), b)
    return congruence(sqrt_psd(a), apply_spectral_psd(inner, f, _rank(b)))


def _transposed(f: OMFunction, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    inner = congruence(inv_sqrt_psd(b), a)
    return congruence(sqrt_psd(b), apply_spectral_psd(inner, f.transposed, _rank(a)))


def _on_range_of_left(solve: PairFormula, slope: float, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    """a sigma b for singular a, from the invertible compression of a to its range.

    With V spanning range(a) and s the shorted operator of b to range(V),
    a sigma b = V (V*aV sigma s) V* + slope (b - V s V*).
    """
    V = support_basis(a)
    if V.shape[1] == 0:
        return b * slope
    s = shorted(b, V)
    on_range = expand(solve(compress(a, V), s), V)
    if slope == 0.0:
        return on_range
    return PsdMatrix._trusted(on_range.entries + slope * (b.entries - expand(s, V).entries))


def _reduce_or_ladder(
    solve: PairFormula,
    slope: Callable[[], float],
    formula: PairFormula,
    a: PsdMatrix,
    b: PsdMatrix,
) -> PsdMatrix:
    try:
        beta = slope()
        if math.isfinite(beta):
            return _on_range_of_left(solve, beta, a, b)
    except (SingularMatrix, UnsupportedInversion):
        pass
    return epsilon_ladder(formula, a, b)


def _solve_functional(f: OMFunction, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    a_ok, b_ok = is_invertible(a), is_invertible(b)
    if b_ok and (not a_ok or _condition(b) < _condition(a)):
        try:
            return _transposed(f, a, b)
        except UnsupportedInversion:
            pass
    if a_ok:
        return _primal(f, a, b)
    return _reduce_or_ladder(
        partial(_solve_functional, f), f.slope_at_infinity, partial(_primal, f), a, b
    )


def eval_primal(f: OMFunction, A: PsdMatrix, B: PsdMatrix) -> PsdMatrix:
    """A^(1/2) f(A^(-1/2) B A^(-1/2)) A^(1/2), with singular pairs handled on the support."""
    A, B = _pair(A, B)
    if is_invertible(A) or is_invertible(B):
        return _solve_functional(f, A, B)
    return _on_support(A, B, partial(_solve_functional, f))


# integral route


def _integral(mu: RepMeasure, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    a_inv = inv_psd(a).entries
    b_inv = inv_psd(b).entries

    def integrand(lam: float) -> np.ndarray:
        # ((lam + 1)/(2 lam)) (lam a ! b), arranged so neither tail overflows
        if lam < 1.0:
            return (lam + 1.0) * np.linalg.inv(a_inv + lam * b_inv)
        return ((lam + 1.0) / lam) * np.linalg.inv(a_inv / lam + b_inv)

    value = integrate(mu, Integrand(integrand, at_zero=a.entries, at_inf=b.entries))
    return PsdMatrix._trusted(np.zeros_like(a.entries) + value)


def _spectral_integral(mu: RepMeasure, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    """Integral route for invertible a and singular b.

    T = a^(-1/2) b a^(-1/2) is diagonalized once; the integrand is then
    a^(1/2) U diag(kernel(lam, t)) U* a^(1/2).
    """
    t, U = congruence(inv_sqrt_psd(a), b).spectrum
    t = np.array(t, dtype=float)
    rank = _rank(b)
    if rank is not None:
        t[: len(t) - rank] = 0.0
    left = sqrt_psd(a).entries @ U

    def integrand(lam: float) -> np.ndarray:
        weights = np.array([kernel(lam, x) for x in t])
        return (left * weights) @ left.conj().T

    value = integrate(mu, Integrand(integrand, at_zero=a.entries, at_inf=b.entries))
    return PsdMatrix._trusted(np.zeros_like(a.entries) + value)


def _solve_integral(mu: RepMeasure, a: PsdMatrix, b: PsdMatrix) -> PsdMatrix:
    if is_invertible(a):
        return _integral(mu, a, b) if is_invertible(b) else _spectral_integral(mu, a, b)
    return _reduce_or_ladder(
        partial(_solve_integral, mu), lambda: mu.atom_inf, partial(_integral, mu), a, b
    )


def eval_integral(mu: RepMeasure, A: PsdMatrix, B: PsdMatrix) -> PsdMatrix:
    """Integral of ((lam + 1)/(2 lam)) (lam A ! B) dmu(lam), with g(0) = A and g(inf) = B."""
    A, B = _pair(A, B)
    if is_invertible(A) and is_invertible(B):
        return _integral(mu, A, B)
    return _on_support(A, B, partial(_solve_integral, mu))


# dispatch

_CLOSED_FORMS: dict[str, PairFormula] = {
    "arithmetic": lambda A, B: (A + B) * 0.5,
    "geometric": partial(eval_primal, Power(0.5)),
    "harmonic": harmonic,
    "parallel_sum": parallel_sum,
    "logarithmic": partial(eval_primal, LogMean()),
    "left": lambda A, B: A,
    "right": lambda A, B: B,
}


def evaluate(sigma: Connection, A, B) -> PsdMatrix:
    """A sigma B, dispatched on the connection's route."""
    A, B = _pair(A, B)
    match sigma.route:
        case Route.CLOSED_FORM:
            return _CLOSED_FORMS[sigma.name](A, B)
        case Route.FROM_FUNCTION:
            return eval_primal(sigma.function, A, B)
        case Route.FROM_MEASURE:
            return eval_integral(sigma.measure, A, B)
    total = PsdMatrix.zeros(A.dim)
    for weight, tau in sigma.terms:
        total = total + evaluate(tau, A, B) * weight
    return total
