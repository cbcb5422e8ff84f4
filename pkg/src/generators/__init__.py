"""
Seeded random PSD matrices for verification trials.
"""

from __future__ import annotations

import numpy as np

from src.matcore import PsdMatrix


class PsdGenerator:
    """Generates random positive semidefinite matrices G G^T.

    Entries of G are standard normal. Rank-deficient matrices come from
    zeroing columns of G.
    """

    def __init__(self, seed: int | np.random.Generator = 42):
        if isinstance(seed, np.random.Generator):
            self.rng = seed
        else:
            self.rng = np.random.default_rng(seed)

    def generate(self, dim: int, rank: int | None = None) -> PsdMatrix:
        """A random PSD matrix of the given rank (full rank by default)."""
        rank = dim if rank is None else rank
        if not 0 <= rank <= dim:
            raise ValueError(f"rank must lie in [0, {dim}], got {rank}")
        g = self.rng.standard_normal((dim, dim))
        g[:, rank:] = 0.0
        return PsdMatrix._trusted(g @ g.T)

    def invertible(self, dim: int, floor: float = 0.05) -> PsdMatrix:
        """G G^T + floor I, bounded away from singular."""
        g = self.rng.standard_normal((dim, dim))
        return PsdMatrix._trusted(g @ g.T + floor * np.eye(dim))

    def singular(self, dim: int) -> PsdMatrix:
        """Random rank-deficient matrix (rank in [0, dim - 1])."""
        return self.generate(dim, int(self.rng.integers(0, dim)))

    def increment(self, dim: int) -> PsdMatrix:
        """A PSD increment of random rank, scaled down so A + E stays comparable to A."""
        rank = int(self.rng.integers(1, dim + 1))
        return self.generate(dim, rank) * float(self.rng.uniform(0.05, 1.0))

    def projection(self, dim: int, rank: int | None = None) -> PsdMatrix:
        """Orthogonal projection onto a random subspace."""
        if rank is None:
            rank = int(self.rng.integers(0, dim + 1))
        q, _ = np.linalg.qr(self.rng.standard_normal((dim, dim)))
        basis = q[:, :rank]
        return PsdMatrix._trusted(basis @ basis.T)

    def pair(self, dim: int, singular: bool = False) -> tuple[PsdMatrix, PsdMatrix]:
        """(A, B) with one operand invertible; the other is rank-deficient when ``singular``."""
        A = self.singular(dim) if singular else self.invertible(dim)
        B = self.invertible(dim)
        if singular and self.rng.random() < 0.5:
            return B, A
        return A, B

    def singular_pair(self, dim: int) -> tuple[PsdMatrix, PsdMatrix]:
        """(A, B) both rank-deficient, ranks in [1, dim - 1] (zero matrices when dim is 1)."""
        low = 1 if dim > 1 else 0
        ranks = self.rng.integers(low, dim, size=2)
        return self.generate(dim, int(ranks[0])), self.generate(dim, int(ranks[1]))

    def weights(self, count: int, low: float = 0.1, high: float = 3.0) -> list[float]:
        return [float(w) for w in self.rng.uniform(low, high, size=count)]
