"""
Finite Borel measures on [0, inf] as endpoint atoms + interior atoms + densities.

Usage:
    from src.measures import dirac, integrate, Integrand, total_mass

    mu = measure_scale(0.5, measure_add(dirac(0.0), dirac(math.inf)))
    total_mass(mu)                                # 1.0
    integrate(mu, Integrand(lambda lam: lam, at_zero=a, at_inf=b))  # (a + b)/2
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.config.defaults import get_tolerances
from src.errors import (
    IncomparableRepresentation,
    MissingEndpointValue,
    NegativeScalar,
    NonFiniteIntegral,
)
from src.measures.densities import CatalogDensity
from src.measures.quadrature import QuadSpec


def default_quad() -> QuadSpec:
    tol = get_tolerances()
    return QuadSpec(node_count=tol.quad_nodes, substitution=tol.quad_substitution)


@dataclass(frozen=True)
class RepMeasure:
    """Measure on [0, inf].

    interior_atoms: ((location, mass), ...) with strictly increasing positive
        finite locations.
    densities: ((weight, CatalogDensity), ...), at most one entry per density.
    """

    atom_zero: float = 0.0
    atom_inf: float = 0.0
    interior_atoms: tuple[tuple[float, float], ...] = ()
    densities: tuple[tuple[float, CatalogDensity], ...] = ()
    quad: QuadSpec = field(default_factory=default_quad)

    def __post_init__(self):
        if self.atom_zero < 0 or self.atom_inf < 0:
            raise NegativeScalar("Endpoint atom masses must be nonnegative")
        previous = 0.0
        for loc, mass in self.interior_atoms:
            if not (0.0 < loc < math.inf):
                raise ValueError(f"Interior atom location must be in (0, inf), got {loc}")
            if loc <= previous:
                raise ValueError("Interior atom locations must be strictly increasing")
            if mass < 0:
                raise NegativeScalar(f"Atom mass must be nonnegative, got {mass}")
            previous = loc
        names = [d.spec for _, d in self.densities]
        if len(names) != len(set(names)):
            raise ValueError("Duplicate density components")
        for weight, _ in self.densities:
            if weight < 0:
                raise NegativeScalar(f"Density weight must be nonnegative, got {weight}")

    @classmethod
    def build(
        cls,
        atom_zero: float = 0.0,
        atom_inf: float = 0.0,
        atoms: Iterable[tuple[float, float]] = (),
        densities: Iterable[tuple[float, CatalogDensity]] = (),
        quad: QuadSpec | None = None,
    ) -> RepMeasure:
        """Normalize raw parts: sort and merge atoms, merge repeated densities, drop zeros."""
        merged: dict[float, float] = {}
        for loc, mass in atoms:
            loc, mass = float(loc), float(mass)
            if loc == 0.0:
                atom_zero += mass
            elif loc == math.inf:
                atom_inf += mass
            else:
                merged[loc] = merged.get(loc, 0.0) + mass
        dens: dict[CatalogDensity, float] = {}
        for weight, density in densities:
            dens[density] = dens.get(density, 0.0) + float(weight)
        ordered = sorted(dens.items(), key=lambda item: item[0].spec)
        return cls(
            atom_zero=float(atom_zero),
            atom_inf=float(atom_inf),
            interior_atoms=tuple((loc, m) for loc, m in sorted(merged.items()) if m != 0.0),
            densities=tuple((w, d) for d, w in ordered if w != 0.0),
            quad=quad or default_quad(),
        )

    @property
    def has_density(self) -> bool:
        return bool(self.densities)

    @property
    def is_atomic(self) -> bool:
        return not self.densities

    def density_per_log(self, u: np.ndarray) -> np.ndarray:
        """Combined density per unit log-length at u = log(lam)."""
        total = np.zeros_like(np.asarray(u, dtype=float))
        for weight, density in self.densities:
            total = total + weight * density.per_log(u)
        return total

    def with_quad(self, quad: QuadSpec) -> RepMeasure:
        return RepMeasure(
            self.atom_zero, self.atom_inf, self.interior_atoms, self.densities, quad
        )

    def __str__(self) -> str:
        from src.measures.textio import format_measure_spec

        return format_measure_spec(self).strip().replace("\n", "; ") or "zero"


def zero_measure() -> RepMeasure:
    return RepMeasure()


def dirac(x: float, mass: float = 1.0) -> RepMeasure:
    """Point mass at x in [0, inf]; x = 0 and x = inf land on the endpoint atoms."""
    if x < 0 or math.isnan(x):
        raise ValueError(f"Dirac location must be in [0, inf], got {x}")
    return RepMeasure.build(atoms=[(x, mass)])


def density_measure(density: CatalogDensity, weight: float = 1.0,
                    quad: QuadSpec | None = None) -> RepMeasure:
    return RepMeasure.build(densities=[(weight, density)], quad=quad)


@dataclass(frozen=True)
class Integrand:
    """Function on (0, inf) with declared endpoint values g(0) and g(inf).

    Values may be scalars or arrays (matrix-valued integrands).
    """

    fn: Callable[[float], Any]
    at_zero: Any = None
    at_inf: Any = None


def _density_quadrature(mu: RepMeasure, g: Callable[[float], Any]) -> Any:
    u, w = mu.quad.log_nodes()
    lam, _ = mu.quad.nodes()
    weights = w * mu.density_per_log(u)
    result: Any = 0.0
    for lam_k, weight_k in zip(lam, weights, strict=True):
        if weight_k == 0.0:
            continue
        result = result + weight_k * g(float(lam_k))
    return result


def total_mass(mu: RepMeasure) -> float:
    """mu([0, inf]): atoms plus quadrature of the density."""
    mass = mu.atom_zero + mu.atom_inf + sum(m for _, m in mu.interior_atoms)
    if mu.densities:
        u, w = mu.quad.log_nodes()
        dens = float(np.sum(w * mu.density_per_log(u)))
        if not math.isfinite(dens):
            raise NonFiniteIntegral(f"Density quadrature is not finite: {dens}")
        mass += dens
    return float(mass)


def integrate(mu: RepMeasure, g: Integrand) -> Any:
    """g(0) mu({0}) + g(inf) mu({inf}) + sum w_i g(lam_i) + quadrature of g * density."""
    result: Any = 0.0
    if mu.atom_zero:
        if g.at_zero is None:
            raise MissingEndpointValue("Measure has an atom at 0 but g(0) is not declared")
        result = result + mu.atom_zero * np.asarray(g.at_zero)
    if mu.atom_inf:
        if g.at_inf is None:
            raise MissingEndpointValue("Measure has an atom at inf but g(inf) is not declared")
        result = result + mu.atom_inf * np.asarray(g.at_inf)
    for loc, mass in mu.interior_atoms:
        if mass:
            result = result + mass * np.asarray(g.fn(loc))
    if mu.densities:
        result = result + np.asarray(_density_quadrature(mu, g.fn))
    if not np.all(np.isfinite(result)):
        raise NonFiniteIntegral("Integral is not finite")
    if np.ndim(result) == 0:
        return float(np.real_if_close(result))
    return result


def measure_add(mu: RepMeasure, nu: RepMeasure) -> RepMeasure:
    """Atom-wise and density-wise sum; atoms at equal locations merge."""
    quad = mu.quad if mu.quad.node_count >= nu.quad.node_count else nu.quad
    return RepMeasure.build(
        atom_zero=mu.atom_zero + nu.atom_zero,
        atom_inf=mu.atom_inf + nu.atom_inf,
        atoms=list(mu.interior_atoms) + list(nu.interior_atoms),
        densities=list(mu.densities) + list(nu.densities),
        quad=quad,
    )


def measure_scale(k: float, mu: RepMeasure) -> RepMeasure:
    if k < 0:
        raise NegativeScalar(f"Scalar must be nonnegative, got {k}")
    return RepMeasure.build(
        atom_zero=k * mu.atom_zero,
        atom_inf=k * mu.atom_inf,
        atoms=[(loc, k * m) for loc, m in mu.interior_atoms],
        densities=[(k * w, d) for w, d in mu.densities],
        quad=mu.quad,
    )


def measure_leq(mu: RepMeasure, nu: RepMeasure) -> bool:
    """mu <= nu setwise, decided on atoms and on the density at quadrature nodes.

    Raises IncomparableRepresentation when one side has density mass exactly
    where the other carries only interior atoms.
    """
    eps = get_tolerances().order_tol
    mu_atoms = any(m > eps for _, m in mu.interior_atoms)
    nu_atoms = any(m > eps for _, m in nu.interior_atoms)
    if (mu.has_density and not nu.has_density and nu_atoms) or (
        nu.has_density and not mu.has_density and mu_atoms
    ):
        raise IncomparableRepresentation(
            "Cannot order a density against interior atoms in this representation"
        )

    if nu.atom_zero - mu.atom_zero < -eps or nu.atom_inf - mu.atom_inf < -eps:
        return False
    nu_mass = dict(nu.interior_atoms)
    for loc, mass in mu.interior_atoms:
        if nu_mass.get(loc, 0.0) - mass < -eps:
            return False

    if mu.has_density or nu.has_density:
        u, _ = max(mu.quad, nu.quad, key=lambda q: q.node_count).log_nodes()
        # lam * rho has the sign of rho
        diff = nu.density_per_log(u) - mu.density_per_log(u)
        if np.any(diff < -eps):
            return False
    return True


def measure_distance(mu: RepMeasure, nu: RepMeasure) -> float:
    """Pseudo-metric |‖mu‖ - ‖nu‖| of the norm topology."""
    return abs(total_mass(mu) - total_mass(nu))
