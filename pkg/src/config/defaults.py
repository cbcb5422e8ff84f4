"""
Default configurations for connection evaluation and verification.
Loads settings from environment with sensible defaults.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field, model_validator

ENV_PREFIX = "KA_"


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances shared by every module.

    Relative tolerances are scaled by the operator norm of the operands; the
    absolute floor keeps comparisons meaningful for near-zero matrices.
    """

    # matcore
    tol_sym: float = 1e-12
    tol_psd: float = 1e-10
    tol_inv: float = 1e-12
    abs_floor: float = 1e-14

    # order comparisons on functions and measures
    order_tol: float = 1e-12

    # epsilon-ladder for singular inputs
    ladder_rungs: tuple[float, ...] = (1e-4, 1e-6, 1e-8, 1e-10)
    ladder_accept: float = 1e-6

    # connections
    mean_tol: float = 1e-9
    zero_norm: float = 1e-14
    scalar_tol: float = 1e-10

    # loewner screen
    loewner_screen_tol: float = 1e-8
    derivative_step: float = 1e-6

    # quadrature
    quad_nodes: int = 200
    quad_substitution: str = "log-tangent"

    # verify assertions
    loewner_tol: float = 1e-8
    equality_tol: float = 1e-8
    norm_form_tol: float = 1e-9
    isometry_function_tol: float = 1e-9
    isometry_measure_tol: float = 1e-6
    route_tol: float = 1e-6
    continuity_monotone_tol: float = 1e-9
    continuity_residual_tol: float = 1e-5
    convergence_tol: float = 1e-6

    @classmethod
    def from_env(cls) -> Tolerances:
        """Load from environment variables (``KA_<FIELD>``, case-insensitive field)."""
        overrides = {}
        for f in dataclasses.fields(cls):
            raw = os.getenv(f"{ENV_PREFIX}{f.name.upper()}")
            if raw is not None:
                overrides[f.name] = raw
        return cls().with_overrides(overrides)

    def with_overrides(self, overrides: dict[str, object]) -> Tolerances:
        """Return a copy with named fields replaced; string values are coerced."""
        known = {f.name: f for f in dataclasses.fields(self)}
        changes = {}
        for name, value in overrides.items():
            key = name.strip().lower()
            if key not in known:
                raise ValueError(f"Unknown tolerance: {name}")
            current = getattr(self, key)
            changes[key] = _coerce(value, current)
        return dataclasses.replace(self, **changes)


def _coerce(value: object, like: object) -> object:
    if not isinstance(value, str):
        return value
    if isinstance(like, tuple):
        return tuple(float(v) for v in value.replace(";", ",").split(",") if v.strip())
    if isinstance(like, bool):
        return value.strip().lower() in {"1", "true", "yes"}
    if isinstance(like, int):
        return int(value)
    if isinstance(like, float):
        return float(value)
    return value.strip()


# Lazily loaded, replaceable by the CLI after --tol parsing.
_TOLERANCES: Tolerances | None = None


def get_tolerances() -> Tolerances:
    """Get the active tolerances, loading from the environment on first use."""
    global _TOLERANCES
    if _TOLERANCES is None:
        _TOLERANCES = Tolerances.from_env()
    return _TOLERANCES


def set_tolerances(tolerances: Tolerances | None) -> None:
    """Install tolerances for subsequent calls; ``None`` reloads from the environment."""
    global _TOLERANCES
    _TOLERANCES = tolerances


class TrialConfig(BaseModel):
    """Configuration for one verification run."""

    model_config = ConfigDict(frozen=True)

    dim_lo: int = Field(default=1, ge=1)
    dim_hi: int = Field(default=6, ge=1)
    trials: int = Field(default=200, ge=1)
    seed: int = Field(default=20240101, ge=0)
    workers: int = Field(default=1, ge=1)
    nodes: int | None = Field(default=None, ge=8)
    tolerance_overrides: dict[str, str | float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_dims(self) -> TrialConfig:
        if self.dim_hi < self.dim_lo:
            raise ValueError(f"dim_hi ({self.dim_hi}) must be >= dim_lo ({self.dim_lo})")
        return self

    @property
    def dims(self) -> range:
        return range(self.dim_lo, self.dim_hi + 1)

    def tolerances(self) -> Tolerances:
        """Active tolerances with this run's overrides (and node count) applied."""
        overrides: dict[str, object] = dict(self.tolerance_overrides)
        if self.nodes is not None:
            overrides["quad_nodes"] = self.nodes
        return get_tolerances().with_overrides(overrides)

    @classmethod
    def from_env(cls) -> TrialConfig:
        return cls(
            trials=int(os.getenv(f"{ENV_PREFIX}TRIALS", "200")),
            seed=int(os.getenv(f"{ENV_PREFIX}SEED", "20240101")),
            workers=int(os.getenv(f"{ENV_PREFIX}WORKERS", "1")),
        )


def parse_dims(text: str) -> tuple[int, int]:
    """Parse ``lo:hi`` (or a single ``n``) into a dimension range."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"Invalid dims range: {text!r} (expected lo:hi)") from None
    return lo, hi


# Suite configurations
SUITES = {
    "axioms": {
        "checks": [
            "monotonicity",
            "transformer",
            "continuity_from_above",
            "harness_soundness",
        ],
        "description": "Monotonicity, transformer inequality, continuity from above",
    },
    "norms": {
        "checks": ["norm_forms", "norm_axioms", "norm_bound", "faithfulness"],
        "description": "Norm forms, normed ordered cone axioms, norm bound",
    },
    "isometry": {
        "checks": ["isometry", "route_agreement", "measure_order_counterexample"],
        "description": "Three-way norm equality and integral reconstruction",
    },
    "means": {
        "checks": ["mean_tfae", "mean_limit"],
        "description": "Characterizations of means and limits of means",
    },
    "convergence": {
        "checks": ["convergence_equivalence"],
        "description": "Equivalence of convergence in the three cones",
    },
    "screens": {
        "checks": ["loewner_screen"],
        "description": "Loewner-matrix screen sanity",
    },
}


def get_suite_config(suite_name: str) -> dict:
    """Get configuration for a verification suite; ``all`` unions every suite."""
    if suite_name == "all":
        checks = [c for suite in SUITES.values() for c in suite["checks"]]
        return {"checks": checks, "description": "Every checkable claim"}
    if suite_name not in SUITES:
        raise ValueError(f"Unknown suite: {suite_name}")
    return SUITES[suite_name]
