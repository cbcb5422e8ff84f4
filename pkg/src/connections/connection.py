"""
Connection descriptors and the cone operations on them.

A Connection is an immutable description of a binary operation on PSD
pairs. Evaluation lives in ``src.connections.evaluation``; the descriptor
only records which route computes it.

Usage:
    from src.connections import ARITHMETIC, HARMONIC, conn_add, conn_scale

    sigma = conn_scale(0.5, conn_add(ARITHMETIC, HARMONIC))
    sigma.evaluate(A, B)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

from src.errors import NegativeScalar
from src.matcore import HermitianMatrix
from src.measures import RepMeasure
from src.monotone import OMFunction


class Route(StrEnum):
    CLOSED_FORM = "closed_form"
    FROM_FUNCTION = "from_function"
    FROM_MEASURE = "from_measure"
    COMBINATION = "combination"


# The five catalog closed forms, plus the trivial means (A, B) -> A and -> B.
CLOSED_FORMS = ("arithmetic", "geometric", "harmonic", "parallel_sum", "logarithmic")
TRIVIAL_FORMS = ("left", "right")


@dataclass(frozen=True)
class Connection:
    """Binary operation on PSD pairs, described by its evaluation route.

    closed_form    ``name`` in CLOSED_FORMS or TRIVIAL_FORMS
    from_function  ``function``, evaluated by functional calculus
    from_measure   ``measure``, evaluated through the integral representation;
                   ``source`` keeps the file it was loaded from, if any
    combination    ``terms`` of (weight >= 0, Connection); empty is the zero connection
    """

    route: Route
    label: str
    name: str | None = None
    function: OMFunction | None = None
    measure: RepMeasure | None = None
    source: Path | None = None
    terms: tuple[tuple[float, Connection], ...] = ()

    def __post_init__(self):
        if self.route is Route.CLOSED_FORM and self.name not in CLOSED_FORMS + TRIVIAL_FORMS:
            raise ValueError(f"Unknown closed form: {self.name}")
        if self.route is Route.FROM_FUNCTION and self.function is None:
            raise ValueError("from_function route needs a function")
        if self.route is Route.FROM_MEASURE and self.measure is None:
            raise ValueError("from_measure route needs a measure")
        for weight, _ in self.terms:
            if weight < 0:
                raise NegativeScalar(f"Combination weights must be nonnegative, got {weight}")

    @property
    def is_zero(self) -> bool:
        """Structurally zero: the empty combination."""
        return self.route is Route.COMBINATION and not self.terms

    def evaluate(self, A: HermitianMatrix, B: HermitianMatrix) -> HermitianMatrix:
        from src.connections.evaluation import evaluate

        return evaluate(self, A, B)

    def __str__(self) -> str:
        return self.label


def closed_form(name: str) -> Connection:
    if name not in CLOSED_FORMS + TRIVIAL_FORMS:
        raise ValueError(f"Unknown closed form: {name}")
    return Connection(Route.CLOSED_FORM, label=name, name=name)


def from_function(f: OMFunction, label: str | None = None) -> Connection:
    return Connection(Route.FROM_FUNCTION, label=label or f"function {f.label}", function=f)


def from_measure(
    mu: RepMeasure, label: str | None = None, source: Path | None = None
) -> Connection:
    if label is None:
        label = f"measure {source}" if source is not None else f"measure [{mu}]"
    return Connection(Route.FROM_MEASURE, label=label, measure=mu, source=source)


def _g(value: float) -> str:
    return f"{value:.12g}"


def combination(terms: list[tuple[float, Connection]] | tuple = ()) -> Connection:
    """Nonnegative combination; nested combinations are flattened."""
    flat: list[tuple[float, Connection]] = []
    for weight, sigma in terms:
        weight = float(weight)
        if weight < 0:
            raise NegativeScalar(f"Scalar must be nonnegative, got {weight}")
        if sigma.route is Route.COMBINATION:
            flat.extend((weight * w, tau) for w, tau in sigma.terms)
        else:
            flat.append((weight, sigma))
    if not flat:
        return Connection(Route.COMBINATION, label="zero")
    label = " + ".join(
        sigma.label if w == 1.0 else f"{_g(w)}*{sigma.label}" for w, sigma in flat
    )
    return Connection(Route.COMBINATION, label=label, terms=tuple(flat))


ARITHMETIC = closed_form("arithmetic")
GEOMETRIC = closed_form("geometric")
HARMONIC = closed_form("harmonic")
PARALLEL_SUM = closed_form("parallel_sum")
LOGARITHMIC = closed_form("logarithmic")
LEFT = closed_form("left")
RIGHT = closed_form("right")
ZERO_CONNECTION = combination()

CATALOG_CONNECTIONS = {
    "arithmetic": ARITHMETIC,
    "geometric": GEOMETRIC,
    "harmonic": HARMONIC,
    "parallel_sum": PARALLEL_SUM,
    "logarithmic": LOGARITHMIC,
}


def get_closed_form(name: str) -> Connection:
    """Look up a catalog connection (``left``/``right`` included)."""
    if name in CATALOG_CONNECTIONS:
        return CATALOG_CONNECTIONS[name]
    if name in TRIVIAL_FORMS:
        return LEFT if name == "left" else RIGHT
    raise ValueError(f"Unknown connection: {name}")


def conn_add(sigma: Connection, eta: Connection) -> Connection:
    """(A, B) -> A sigma B + A eta B."""
    return combination([(1.0, sigma), (1.0, eta)])


def conn_scale(k: float, sigma: Connection) -> Connection:
    """(A, B) -> k (A sigma B); k = 0 gives the zero connection."""
    if k < 0:
        raise NegativeScalar(f"Scalar must be nonnegative, got {k}")
    if k == 0:
        return ZERO_CONNECTION
    return combination([(k, sigma)])
