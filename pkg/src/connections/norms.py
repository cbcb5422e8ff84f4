"""
The connection norm, the induced scalar operation, means and normalization.

Usage:
    from src.connections import HARMONIC, connection_norm, conn_scale

    connection_norm(conn_scale(3, HARMONIC)).value   # 3.0
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from src.config.defaults import get_tolerances
from src.connections.connection import Connection, conn_scale
from src.connections.evaluation import as_psd, evaluate
from src.errors import NonScalarResult, ZeroConnection
from src.matcore import HermitianMatrix, PsdMatrix, min_eigenvalue, operator_norm


@dataclass(frozen=True)
class ConnectionNorm:
    """‖sigma‖ together with the matrix I sigma I it was read from."""

    value: float
    witness: PsdMatrix


def connection_norm(sigma: Connection, dim: int = 2) -> ConnectionNorm:
    """‖sigma‖ = ‖I sigma I‖; independent of the dimension."""
    identity = PsdMatrix.identity(dim)
    witness = evaluate(sigma, identity, identity)
    return ConnectionNorm(value=operator_norm(witness), witness=witness)


def connection_distance(sigma: Connection, eta: Connection) -> float:
    """Pseudo-metric |‖sigma‖ - ‖eta‖|."""
    return abs(connection_norm(sigma).value - connection_norm(eta).value)


def induced_scalar(sigma: Connection, x: float, y: float) -> float:
    """x sigma~ y, read off (x I) sigma (y I) at dim 2."""
    if x < 0 or y < 0:
        raise ValueError(f"Induced scalar operation needs x, y >= 0, got {x}, {y}")
    result = evaluate(sigma, PsdMatrix.scalar(x, 2), PsdMatrix.scalar(y, 2)).entries
    value = float(np.real(np.trace(result))) / 2.0
    deviation = float(np.max(np.abs(result - value * np.eye(2))))
    if deviation > get_tolerances().scalar_tol * max(1.0, abs(value)):
        raise NonScalarResult(
            f"{sigma.label} on scalar multiples of I deviates from a multiple of I "
            f"by {deviation:.3e}"
        )
    return value


def is_mean(sigma: Connection) -> bool:
    """A sigma A = A for all A >= 0, equivalently ‖sigma‖ = 1."""
    return abs(connection_norm(sigma).value - 1.0) <= get_tolerances().mean_tol


def normalize(sigma: Connection) -> Connection:
    """sigma / ‖sigma‖, a mean."""
    norm = connection_norm(sigma).value
    if norm <= get_tolerances().zero_norm:
        raise ZeroConnection(f"Cannot normalize {sigma.label}: norm {norm:.3e}")
    return conn_scale(1.0 / norm, sigma)


def loewner_residual(lhs: HermitianMatrix, rhs: HermitianMatrix) -> float:
    """How far lhs <= rhs is from holding: max(0, -lambda_min(rhs - lhs))."""
    return max(0.0, -min_eigenvalue(rhs - lhs))


def conn_leq(
    sigma: Connection,
    eta: Connection,
    pairs: Iterable[tuple[HermitianMatrix, HermitianMatrix]],
    tol: float | None = None,
) -> bool:
    """sigma <= eta on every sampled pair: A sigma B <= A eta B within tol * scale."""
    if tol is None:
        tol = get_tolerances().loewner_tol
    for A, B in pairs:
        lhs, rhs = evaluate(sigma, A, B), evaluate(eta, A, B)
        scale = 1.0 + operator_norm(lhs) + operator_norm(rhs)
        if loewner_residual(lhs, rhs) > tol * scale:
            return False
    return True


@dataclass(frozen=True)
class NormForms:
    """The equivalent expressions for ‖sigma‖.

    pair_sup       sup of ‖A sigma B‖ over the sampled unit-norm pairs
    diagonal_ratio ‖A sigma A‖ / ‖A‖ for the given A
    diagonal_sup   sup of ‖A sigma A‖ over the sampled unit-norm A
    identity       ‖I sigma I‖
    """

    pair_sup: float
    diagonal_ratio: float
    diagonal_sup: float
    identity: float

    @property
    def spread(self) -> float:
        return abs(self.diagonal_ratio - self.identity)


def _unit(M: HermitianMatrix) -> PsdMatrix:
    M = as_psd(M)
    norm = operator_norm(M)
    return M * (1.0 / norm) if norm > 0 else M


def norm_forms(
    sigma: Connection,
    A: HermitianMatrix,
    samples: Sequence[tuple[HermitianMatrix, HermitianMatrix]] = (),
) -> NormForms:
    A = as_psd(A)
    norm_a = operator_norm(A)
    if norm_a == 0:
        raise ZeroConnection("norm_forms needs a nonzero A")
    identity = connection_norm(sigma, A.dim).value
    ratio = operator_norm(evaluate(sigma, A, A)) / norm_a

    unit_a = _unit(A)
    pair_sup = operator_norm(evaluate(sigma, unit_a, unit_a))
    diagonal_sup = pair_sup
    for X, Y in samples:
        X, Y = _unit(X), _unit(Y)
        pair_sup = max(pair_sup, operator_norm(evaluate(sigma, X, Y)))
        diagonal_sup = max(diagonal_sup, operator_norm(evaluate(sigma, X, X)))
    return NormForms(
        pair_sup=pair_sup, diagonal_ratio=ratio, diagonal_sup=diagonal_sup, identity=identity
    )
