"""
Gauss-Legendre quadrature on the open half-line (0, inf).

Nodes are returned in the log variable u = log(lam) with weights for du, so a
density given per unit log-length integrates as sum(w * h(u)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

SUBSTITUTIONS = ("log-tangent", "rational")

# exp(+-700) stays inside double range
LOG_CLAMP = 700.0


@dataclass(frozen=True)
class QuadSpec:
    """Quadrature rule for densities on (0, inf).

    substitution:
        ``rational``     t -> lam = t/(1-t), Jacobian 1/(1-t)^2
        ``log-tangent``  t -> lam = exp(pi tan(pi (t - 1/2)))
    """

    node_count: int = 200
    substitution: str = "log-tangent"

    def __post_init__(self):
        if self.node_count < 8:
            raise ValueError(f"QuadSpec needs at least 8 nodes, got {self.node_count}")
        if self.substitution not in SUBSTITUTIONS:
            raise ValueError(f"Unknown substitution: {self.substitution}")

    def log_nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """(u_k, w_k) with sum w_k h(u_k) ~ integral of h over the real line."""
        return _log_nodes(self.node_count, self.substitution)

    def nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """(lam_k, w_k) in the log variable; lam_k is clamped to exp(+-700)."""
        u, w = self.log_nodes()
        return np.exp(np.clip(u, -LOG_CLAMP, LOG_CLAMP)), w

    def doubled(self) -> QuadSpec:
        return QuadSpec(node_count=2 * self.node_count, substitution=self.substitution)


@lru_cache(maxsize=32)
def _log_nodes(n: int, substitution: str) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    t = (x + 1.0) / 2.0
    wt = w / 2.0
    if substitution == "rational":
        u = np.log(t) - np.log1p(-t)
        du = wt / (t * (1.0 - t))
    else:
        theta = np.pi * (t - 0.5)
        u = np.pi * np.tan(theta)
        du = wt * np.pi**2 / np.cos(theta) ** 2
    u.setflags(write=False)
    du.setflags(write=False)
    return u, du
