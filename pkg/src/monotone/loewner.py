"""
Finite Loewner-matrix screen for operator monotonicity.

A positive semidefinite Loewner matrix on every finite grid is necessary
(and, over all grids, sufficient) for operator monotonicity. The screen is
therefore only a necessary-condition test.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from src.config.defaults import get_tolerances
from src.errors import DegenerateGrid
from src.monotone.functions import DEFAULT_GRID, OMFunction


@dataclass(frozen=True)
class LoewnerVerdict:
    is_monotone_candidate: bool
    min_loewner_eigenvalue: float
    matrix_norm: float
    sample_points: np.ndarray = field(compare=False)


def screen_points(grid: Sequence[float] = DEFAULT_GRID) -> tuple[float, ...]:
    """Positive part of a grid, the admissible Loewner points."""
    return tuple(x for x in grid if x > 0)


def loewner_matrix(f: OMFunction, points: Sequence[float]) -> np.ndarray:
    """L_ij = divided difference of f; diagonal by central difference."""
    xs = np.asarray(points, dtype=float)
    if xs.ndim != 1 or len(xs) < 2:
        raise DegenerateGrid("Loewner screen needs at least two points")
    if np.any(xs <= 0) or not np.all(np.isfinite(xs)):
        raise DegenerateGrid("Loewner points must be positive and finite")
    if len(np.unique(xs)) != len(xs):
        raise DegenerateGrid("Loewner points must be distinct")

    step = get_tolerances().derivative_step
    values = np.array([f(x) for x in xs])
    n = len(xs)
    matrix = np.empty((n, n))
    for i in range(n):
        h = step * xs[i]
        matrix[i, i] = (f(xs[i] + h) - f(xs[i] - h)) / (2.0 * h)
        for j in range(i + 1, n):
            matrix[i, j] = matrix[j, i] = (values[i] - values[j]) / (xs[i] - xs[j])
    return matrix


def loewner_check(f: OMFunction, points: Sequence[float] | None = None) -> LoewnerVerdict:
    """Accept when lambda_min(L) >= -loewner_screen_tol * ‖L‖."""
    pts = screen_points() if points is None else tuple(points)
    matrix = loewner_matrix(f, pts)
    eigenvalues = scipy.linalg.eigvalsh(matrix)
    norm = float(np.max(np.abs(eigenvalues)))
    lowest = float(eigenvalues[0])
    tol = get_tolerances().loewner_screen_tol
    return LoewnerVerdict(
        is_monotone_candidate=lowest >= -tol * norm,
        min_loewner_eigenvalue=lowest,
        matrix_norm=norm,
        sample_points=np.asarray(pts, dtype=float),
    )
