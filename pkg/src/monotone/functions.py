"""
Operator monotone functions on R+ as an ordered cone with norm f(1).

Usage:
    from src.monotone import Power, Moebius, omf_add, omf_norm

    f = omf_add(Power(0.5), Moebius(1.0))
    f(4.0)          # 2 + 1.6
    omf_norm(f)     # 2.0
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from src.config.defaults import get_tolerances
from src.errors import DomainError, NegativeScalar, UnsupportedInversion
from src.measures import (
    GEOMETRIC,
    LOGMEAN,
    Integrand,
    RepMeasure,
    dirac,
    integrate,
    measure_add,
    measure_scale,
    power_density,
    zero_measure,
)

# {0, 0.1, ..., 10} U {20, 50, 100}
DEFAULT_GRID: tuple[float, ...] = tuple(round(0.1 * i, 10) for i in range(101)) + (
    20.0,
    50.0,
    100.0,
)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


class OMFunction(ABC):
    """An operator monotone function R+ -> R+."""

    @abstractmethod
    def evaluate(self, x: float) -> float:
        """f(x) for x >= 0."""

    @abstractmethod
    def slope_at_infinity(self) -> float:
        """lim f(x)/x as x -> inf."""

    @property
    @abstractmethod
    def label(self) -> str: ...

    def __call__(self, x: float) -> float:
        if x < 0 or math.isnan(x):
            raise DomainError(f"Operator monotone functions are defined on [0, inf), got {x}")
        return self.evaluate(float(x))

    def transposed(self, x: float) -> float:
        """x f(1/x), extended to x = 0 by the slope at infinity."""
        if x == 0:
            return self.slope_at_infinity()
        return x * self(1.0 / x)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Affine(OMFunction):
    """x -> a + b x with a, b >= 0."""

    a: float
    b: float

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise NegativeScalar(f"affine coefficients must be nonnegative: {self.a}, {self.b}")

    def evaluate(self, x: float) -> float:
        return self.a + self.b * x

    def slope_at_infinity(self) -> float:
        return self.b

    @property
    def label(self) -> str:
        return f"affine {_fmt(self.a)} {_fmt(self.b)}"


@dataclass(frozen=True)
class Power(OMFunction):
    """x -> x^alpha, alpha in [0, 1]."""

    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"power exponent must lie in [0, 1], got {self.alpha}")

    def evaluate(self, x: float) -> float:
        if self.alpha == 0.0:
            return 1.0
        return x**self.alpha

    def slope_at_infinity(self) -> float:
        return 1.0 if self.alpha == 1.0 else 0.0

    @property
    def label(self) -> str:
        return f"power {_fmt(self.alpha)}"


@dataclass(frozen=True)
class LogMean(OMFunction):
    """x -> (x - 1)/log x, continuously extended by f(0) = 0 and f(1) = 1."""

    def evaluate(self, x: float) -> float:
        if x == 0.0:
            return 0.0
        if x == 1.0:
            return 1.0
        return (x - 1.0) / math.log1p(x - 1.0) if x < 2.0 else (x - 1.0) / math.log(x)

    def slope_at_infinity(self) -> float:
        return 0.0

    @property
    def label(self) -> str:
        return "logmean"


@dataclass(frozen=True)
class Moebius(OMFunction):
    """x -> (1 + lam) x / (x + lam), lam in (0, inf)."""

    lam: float

    def __post_init__(self):
        if not 0.0 < self.lam < math.inf:
            raise DomainError(f"moebius parameter must lie in (0, inf), got {self.lam}")

    def evaluate(self, x: float) -> float:
        return kernel(self.lam, x)

    def slope_at_infinity(self) -> float:
        return 0.0

    @property
    def label(self) -> str:
        return f"moebius {_fmt(self.lam)}"


def kernel(lam: float, x: float) -> float:
    """(1 + lam) x / (x + lam) for lam in (0, inf), evaluated without overflow."""
    if lam >= 1.0:
        return (1.0 + 1.0 / lam) * x / (x / lam + 1.0)
    return (1.0 + lam) * x / (x + lam)


@dataclass(frozen=True)
class MeasureBacked(OMFunction):
    """f(x) = mu({0}) + mu({inf}) x + integral of (1 + lam) x/(x + lam) dmu(lam)."""

    measure: RepMeasure

    def evaluate(self, x: float) -> float:
        if x == 0.0:
            # the interior kernel vanishes at x = 0
            return self.measure.atom_zero
        return integrate(
            self.measure, Integrand(lambda lam: kernel(lam, x), at_zero=1.0, at_inf=x)
        )

    def slope_at_infinity(self) -> float:
        return self.measure.atom_inf

    @property
    def label(self) -> str:
        return f"measure-backed [{self.measure}]"


@dataclass(frozen=True)
class ConeSum(OMFunction):
    """Nonnegative combination sum w_i f_i; the empty sum is the zero function."""

    terms: tuple[tuple[float, OMFunction], ...] = ()

    def __post_init__(self):
        for weight, _ in self.terms:
            if weight < 0:
                raise NegativeScalar(f"Cone weights must be nonnegative, got {weight}")

    def evaluate(self, x: float) -> float:
        return math.fsum(w * f(x) for w, f in self.terms)

    def slope_at_infinity(self) -> float:
        return math.fsum(w * f.slope_at_infinity() for w, f in self.terms)

    @property
    def label(self) -> str:
        if not self.terms:
            return "zero"
        return " + ".join(f"{_fmt(w)}*({f.label})" for w, f in self.terms)


@dataclass(frozen=True)
class Custom(OMFunction):
    """Arbitrary scalar function, used for screening and test fixtures.

    Custom functions are not assumed operator monotone and have no catalog
    measure.
    """

    fn: Callable[[float], float] = field(compare=False)
    name: str = "custom"
    slope: float = math.nan

    def evaluate(self, x: float) -> float:
        return float(self.fn(x))

    def slope_at_infinity(self) -> float:
        if math.isnan(self.slope):
            raise UnsupportedInversion(f"Slope at infinity unknown for {self.name}")
        return self.slope

    @property
    def label(self) -> str:
        return self.name


ZERO = ConeSum(())
ARITHMETIC_F = Affine(0.5, 0.5)
GEOMETRIC_F = Power(0.5)
HARMONIC_F = Moebius(1.0)
LOGARITHMIC_F = LogMean()


def omf_eval(f: OMFunction, x: float) -> float:
    return f(x)


def omf_norm(f: OMFunction) -> float:
    """‖f‖ = f(1)."""
    return f(1.0)


def _flatten(weight: float, f: OMFunction) -> list[tuple[float, OMFunction]]:
    if isinstance(f, ConeSum):
        return [(weight * w, g) for w, g in f.terms]
    return [(weight, f)]


def omf_add(f: OMFunction, g: OMFunction) -> OMFunction:
    return ConeSum(tuple(_flatten(1.0, f) + _flatten(1.0, g)))


def omf_scale(k: float, f: OMFunction) -> OMFunction:
    if k < 0:
        raise NegativeScalar(f"Scalar must be nonnegative, got {k}")
    if k == 0:
        return ZERO
    return ConeSum(tuple(_flatten(float(k), f)))


def omf_sum(terms: Iterable[tuple[float, OMFunction]]) -> OMFunction:
    flat: list[tuple[float, OMFunction]] = []
    for weight, f in terms:
        if weight < 0:
            raise NegativeScalar(f"Scalar must be nonnegative, got {weight}")
        flat.extend(_flatten(float(weight), f))
    return ConeSum(tuple(flat))


def omf_leq(f: OMFunction, g: OMFunction, grid: Sequence[float] = DEFAULT_GRID) -> bool:
    """Pointwise order on the grid: f(x) <= g(x) + order_tol."""
    if len(grid) == 0 or min(grid) < 0:
        raise DomainError("Comparison grid must be nonempty and nonnegative")
    eps = get_tolerances().order_tol
    return all(f(x) <= g(x) + eps for x in grid)


def omf_distance(f: OMFunction, g: OMFunction) -> float:
    """Pseudo-metric |‖f‖ - ‖g‖|."""
    return abs(omf_norm(f) - omf_norm(g))


def omf_validate(f: OMFunction, grid: Sequence[float] = DEFAULT_GRID) -> list[str]:
    """Shape invariants checked on the grid; returns the violations found."""
    eps = 1e-10
    xs = sorted(grid)
    values = [f(x) for x in xs]
    violations = []
    for x, v in zip(xs, values, strict=True):
        if not math.isfinite(v) or v < -eps:
            violations.append(f"negative or non-finite value {v:.6g} at x={x:g}")
    for (x0, v0), (x1, v1) in zip(zip(xs, values), zip(xs[1:], values[1:]), strict=False):
        if v1 < v0 - eps * max(1.0, abs(v0)):
            violations.append(f"decreasing between x={x0:g} and x={x1:g}")
        mid = f((x0 + x1) / 2.0)
        if mid < (v0 + v1) / 2.0 - eps * max(1.0, abs(mid)):
            violations.append(f"not midpoint concave on [{x0:g}, {x1:g}]")
    return violations


def catalog_measure(f: OMFunction) -> RepMeasure:
    """Representing measure of a catalog function, exact where closed forms exist."""
    match f:
        case Affine(a=a, b=b):
            return measure_add(dirac(0.0, a), dirac(math.inf, b))
        case Power(alpha=alpha):
            if alpha == 0.0:
                return dirac(0.0)
            if alpha == 1.0:
                return dirac(math.inf)
            if alpha == 0.5:
                return RepMeasure.build(densities=[(1.0, GEOMETRIC)])
            return RepMeasure.build(densities=[(1.0, power_density(alpha))])
        case LogMean():
            return RepMeasure.build(densities=[(1.0, LOGMEAN)])
        case Moebius(lam=lam):
            return dirac(lam)
        case MeasureBacked(measure=mu):
            return mu
        case ConeSum(terms=terms):
            total = zero_measure()
            for weight, g in terms:
                total = measure_add(total, measure_scale(weight, catalog_measure(g)))
            return total
    raise UnsupportedInversion(f"No representing measure known for function {f.label!r}")


def catalog_function(mu: RepMeasure) -> OMFunction:
    """Closed-form function for a measure built from catalog parts.

    Every atom and catalog density has a closed form, so the result agrees
    with ``MeasureBacked(mu)`` up to quadrature error.
    """
    terms: list[tuple[float, OMFunction]] = []
    if mu.atom_zero or mu.atom_inf:
        terms.append((1.0, Affine(mu.atom_zero, mu.atom_inf)))
    for loc, mass in mu.interior_atoms:
        terms.append((mass, Moebius(loc)))
    for weight, density in mu.densities:
        if density == GEOMETRIC:
            terms.append((weight, Power(0.5)))
        elif density == LOGMEAN:
            terms.append((weight, LogMean()))
        else:
            terms.append((weight, Power(float(density.param))))
    if len(terms) == 1 and terms[0][0] == 1.0:
        return terms[0][1]
    return ConeSum(tuple(terms))
