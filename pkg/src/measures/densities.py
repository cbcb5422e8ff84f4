"""
Named density catalog for representing measures.

Each density is stored per unit log-length, h(u) = lam * rho(lam) with
u = log(lam), which keeps the tails finite in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from src.errors import SpecParseError


@dataclass(frozen=True)
class CatalogDensity:
    """A density rho on (0, inf) from the named catalog.

    geometric          1 / (pi sqrt(lam) (1 + lam))        -> x^(1/2)
    logmean-numeric    1 / (lam (log(lam)^2 + pi^2))       -> (x - 1)/log x
    power alpha        sin(alpha pi)/pi lam^(alpha-1)/(1+lam) -> x^alpha, 0 < alpha < 1
    """

    name: str
    param: float | None = None

    def __post_init__(self):
        if self.name not in DENSITY_NAMES:
            raise SpecParseError(f"Unknown density: {self.name}")
        if self.name == "power":
            if self.param is None or not 0.0 < self.param < 1.0:
                raise SpecParseError(f"power density needs 0 < alpha < 1, got {self.param}")
        elif self.param is not None:
            raise SpecParseError(f"{self.name} density takes no parameter")

    def per_log(self, u: np.ndarray) -> np.ndarray:
        """lam * rho(lam) at lam = exp(u)."""
        u = np.asarray(u, dtype=float)
        if self.name == "geometric":
            a = np.abs(u)
            return np.exp(-a / 2.0) / (math.pi * (1.0 + np.exp(-a)))
        if self.name == "logmean-numeric":
            return 1.0 / (u**2 + math.pi**2)
        alpha = float(self.param)
        c = math.sin(alpha * math.pi) / math.pi
        return np.where(
            u > 0,
            c * np.exp((alpha - 1.0) * np.abs(u)) / (1.0 + np.exp(-np.abs(u))),
            c * np.exp(-alpha * np.abs(u)) / (1.0 + np.exp(-np.abs(u))),
        )

    def value(self, lam: float) -> float:
        """rho(lam) for lam in (0, inf)."""
        if lam <= 0 or not math.isfinite(lam):
            raise ValueError(f"Density is defined on (0, inf), got {lam}")
        return float(self.per_log(np.log(lam))) / lam

    @property
    def spec(self) -> str:
        if self.param is None:
            return self.name
        return f"{self.name} {self.param:.12g}"

    def __str__(self) -> str:
        return self.spec


DENSITY_NAMES = ("geometric", "logmean-numeric", "power")

GEOMETRIC = CatalogDensity("geometric")
LOGMEAN = CatalogDensity("logmean-numeric")


def power_density(alpha: float) -> CatalogDensity:
    return CatalogDensity("power", float(alpha))
