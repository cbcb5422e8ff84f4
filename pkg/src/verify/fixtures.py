"""
Fixtures for the verification harness: catalog connections, known order
relations, screening functions and deliberately broken operations.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from src.connections import (
    ARITHMETIC,
    CATALOG_CONNECTIONS,
    GEOMETRIC,
    HARMONIC,
    LEFT,
    LOGARITHMIC,
    PARALLEL_SUM,
    RIGHT,
    Connection,
    as_psd,
    combination,
)
from src.generators import PsdGenerator
from src.matcore import HermitianMatrix
from src.monotone import Custom, LogMean, Moebius, OMFunction, Power


class Evaluable(Protocol):
    """Anything the axiom checks can evaluate: connections and broken fixtures."""

    label: str

    def evaluate(self, A: HermitianMatrix, B: HermitianMatrix) -> HermitianMatrix: ...


@dataclass(frozen=True)
class BrokenFixture:
    """A binary operation that is not a connection, used to test the harness itself."""

    label: str
    formula: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def evaluate(self, A: HermitianMatrix, B: HermitianMatrix) -> HermitianMatrix:
        A, B = as_psd(A), as_psd(B)
        return HermitianMatrix._trusted(self.formula(A.entries, B.entries))


BROKEN_PRODUCT = BrokenFixture("broken_product", lambda a, b: (a @ b + b @ a) / 2.0)
BROKEN_SQUARE = BrokenFixture("broken_square", lambda a, b: a @ b @ a)
BROKEN_FIXTURES = (BROKEN_PRODUCT, BROKEN_SQUARE)

CATALOG = tuple(CATALOG_CONNECTIONS.values())
CATALOG_MEANS = (ARITHMETIC, GEOMETRIC, HARMONIC, LOGARITHMIC)
CONE_GENERATORS = CATALOG + (LEFT, RIGHT)

# sigma <= eta on all PSD pairs
ORDERED_PAIRS: tuple[tuple[Connection, Connection], ...] = (
    (PARALLEL_SUM, HARMONIC),
    (HARMONIC, GEOMETRIC),
    (GEOMETRIC, LOGARITHMIC),
    (LOGARITHMIC, ARITHMETIC),
    (HARMONIC, ARITHMETIC),
)

# expected Loewner screen outcome
SCREEN_FUNCTIONS: tuple[tuple[OMFunction, bool], ...] = (
    (Power(0.0), True),
    (Power(0.25), True),
    (Power(0.5), True),
    (Power(1.0), True),
    (LogMean(), True),
    (Moebius(1.0), True),
    (Custom(lambda x: x * x, "square", math.inf), False),
    (Custom(math.exp, "exp", math.inf), False),
)


def random_combination(gen: PsdGenerator, terms: int = 2) -> Connection:
    """k1 sigma1 + k2 sigma2 with catalog sigma_i and random weights."""
    picks = gen.rng.integers(0, len(CONE_GENERATORS), size=terms)
    weights = gen.weights(terms)
    return combination([(w, CONE_GENERATORS[int(i)]) for w, i in zip(weights, picks, strict=True)])
