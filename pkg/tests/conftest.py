"""Shared fixtures: seeded generators, small trial configs, clean tolerances."""

import numpy as np
import pytest

from src.config.defaults import TrialConfig, set_tolerances
from src.generators import PsdGenerator
from src.matcore import PsdMatrix


@pytest.fixture(autouse=True)
def clean_tolerances(monkeypatch):
    """Every test starts from the built-in tolerances."""
    for name in ("KA_TRIALS", "KA_SEED", "KA_WORKERS", "KA_RUN_ID"):
        monkeypatch.delenv(name, raising=False)
    set_tolerances(None)
    yield
    set_tolerances(None)


@pytest.fixture
def gen():
    return PsdGenerator(seed=7)


@pytest.fixture
def small_cfg():
    return TrialConfig(dim_lo=1, dim_hi=3, trials=20, seed=11)


@pytest.fixture
def spd_pair():
    """A fixed, well-conditioned, non-commuting pair."""
    A = PsdMatrix([[2.0, 0.5, 0.0], [0.5, 1.0, 0.2], [0.0, 0.2, 1.5]])
    B = PsdMatrix([[1.0, -0.3, 0.1], [-0.3, 3.0, 0.0], [0.1, 0.0, 0.7]])
    return A, B


def assert_matrix_close(actual, expected, atol=1e-10):
    actual = actual.entries if hasattr(actual, "entries") else actual
    expected = expected.entries if hasattr(expected, "entries") else expected
    np.testing.assert_allclose(actual, expected, rtol=0, atol=atol)
