"""
The isomorphisms sigma -> f_sigma and sigma -> mu_sigma.
"""

from __future__ import annotations

import math

from src.connections.connection import Connection, Route
from src.errors import UnsupportedInversion
from src.measures import (
    GEOMETRIC,
    LOGMEAN,
    RepMeasure,
    dirac,
    measure_add,
    measure_scale,
    zero_measure,
)
from src.monotone import (
    Affine,
    LogMean,
    MeasureBacked,
    Moebius,
    OMFunction,
    Power,
    catalog_measure,
    omf_scale,
    omf_sum,
)

_CLOSED_FORM_FUNCTIONS: dict[str, OMFunction] = {
    "arithmetic": Affine(0.5, 0.5),
    "geometric": Power(0.5),
    "harmonic": Moebius(1.0),
    "parallel_sum": omf_scale(0.5, Moebius(1.0)),
    "logarithmic": LogMean(),
    "left": Affine(1.0, 0.0),
    "right": Affine(0.0, 1.0),
}


def _closed_form_measure(name: str) -> RepMeasure:
    match name:
        case "arithmetic":
            return measure_scale(0.5, measure_add(dirac(0.0), dirac(math.inf)))
        case "harmonic":
            return dirac(1.0)
        case "parallel_sum":
            return dirac(1.0, 0.5)
        case "geometric":
            return RepMeasure.build(densities=[(1.0, GEOMETRIC)])
        case "logarithmic":
            return RepMeasure.build(densities=[(1.0, LOGMEAN)])
        case "left":
            return dirac(0.0)
        case "right":
            return dirac(math.inf)
    raise ValueError(f"Unknown closed form: {name}")


def function_from_measure(mu: RepMeasure) -> OMFunction:
    """f(x) = mu({0}) + mu({inf}) x + integral of (1 + lam) x/(x + lam) dmu(lam)."""
    return MeasureBacked(mu)


def representing_function(sigma: Connection) -> OMFunction:
    """The unique f with f(x) I = I sigma (x I)."""
    match sigma.route:
        case Route.CLOSED_FORM:
            return _CLOSED_FORM_FUNCTIONS[sigma.name]
        case Route.FROM_FUNCTION:
            return sigma.function
        case Route.FROM_MEASURE:
            return function_from_measure(sigma.measure)
    return omf_sum((w, representing_function(tau)) for w, tau in sigma.terms)


def representing_measure(sigma: Connection) -> RepMeasure:
    """The measure realizing sigma through the integral representation.

    Function routes are inverted only for catalog functions.
    """
    match sigma.route:
        case Route.CLOSED_FORM:
            return _closed_form_measure(sigma.name)
        case Route.FROM_MEASURE:
            return sigma.measure
        case Route.FROM_FUNCTION:
            try:
                return catalog_measure(sigma.function)
            except UnsupportedInversion as exc:
                raise UnsupportedInversion(
                    f"Cannot invert {sigma.label!r} to a measure: {exc}"
                ) from exc
    total = zero_measure()
    for weight, tau in sigma.terms:
        total = measure_add(total, measure_scale(weight, representing_measure(tau)))
    return total
