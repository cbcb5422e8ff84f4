"""Tests for quadrature, the density catalog and measure arithmetic."""

import math

import numpy as np
import pytest

from src.errors import (
    IncomparableRepresentation,
    MissingEndpointValue,
    NegativeScalar,
    SpecParseError,
)
from src.measures import (
    GEOMETRIC,
    LOGMEAN,
    CatalogDensity,
    Integrand,
    QuadSpec,
    RepMeasure,
    density_measure,
    dirac,
    format_measure_spec,
    integrate,
    load_measure,
    measure_add,
    measure_distance,
    measure_leq,
    measure_scale,
    parse_measure_spec,
    power_density,
    total_mass,
    zero_measure,
)
from src.monotone import MeasureBacked

pytestmark = pytest.mark.unit


def arithmetic_measure() -> RepMeasure:
    return measure_scale(0.5, measure_add(dirac(0.0), dirac(math.inf)))


class TestQuadSpec:
    def test_too_few_nodes(self):
        with pytest.raises(ValueError):
            QuadSpec(node_count=4)

    def test_unknown_substitution(self):
        with pytest.raises(ValueError):
            QuadSpec(substitution="bogus")

    @pytest.mark.parametrize("substitution", ["log-tangent", "rational"])
    def test_nodes_are_positive(self, substitution):
        lam, w = QuadSpec(64, substitution).nodes()
        assert len(lam) == 64
        assert (lam > 0).all()
        assert (w > 0).all()


class TestDensities:
    @pytest.mark.parametrize("density", [GEOMETRIC, LOGMEAN])
    def test_unit_mass(self, density):
        assert total_mass(density_measure(density)) == pytest.approx(1.0, abs=1e-6)

    def test_power_density_unit_mass(self):
        # slow tail: 1e-4 at the default 200 nodes
        assert total_mass(density_measure(power_density(0.25))) == pytest.approx(1.0, abs=1e-4)

    def test_power_density_tightens_with_more_nodes(self):
        mu = density_measure(power_density(0.25), quad=QuadSpec(node_count=800))
        assert total_mass(mu) == pytest.approx(1.0, abs=1e-5)

    @pytest.mark.parametrize("density", [GEOMETRIC, LOGMEAN])
    def test_doubling_nodes_is_stable(self, density):
        mu = density_measure(density)
        coarse = total_mass(mu)
        fine = total_mass(mu.with_quad(mu.quad.doubled()))
        assert abs(coarse - fine) < 1e-8

    def test_geometric_value(self):
        lam = 4.0
        expected = 1.0 / (math.pi * math.sqrt(lam) * (1.0 + lam))
        assert GEOMETRIC.value(lam) == pytest.approx(expected, rel=1e-12)

    def test_invalid_parameters(self):
        with pytest.raises(SpecParseError):
            CatalogDensity("power", 1.5)
        with pytest.raises(SpecParseError):
            CatalogDensity("geometric", 0.5)
        with pytest.raises(SpecParseError):
            CatalogDensity("cauchy")


class TestMeasures:
    def test_dirac_endpoints(self):
        assert dirac(0.0).atom_zero == 1.0
        assert dirac(math.inf).atom_inf == 1.0
        assert dirac(2.0, 0.5).interior_atoms == ((2.0, 0.5),)
        with pytest.raises(ValueError):
            dirac(-1.0)

    def test_add_merges_atoms(self):
        mu = measure_add(dirac(1.0, 0.5), dirac(1.0, 0.5))
        assert mu.interior_atoms == ((1.0, 1.0),)

    def test_scale(self):
        assert total_mass(measure_scale(3.0, arithmetic_measure())) == 3.0
        assert measure_scale(0.0, dirac(1.0)).interior_atoms == ()
        with pytest.raises(NegativeScalar):
            measure_scale(-1.0, dirac(1.0))

    def test_mass_is_linear(self):
        mu = density_measure(GEOMETRIC)
        nu = dirac(3.0, 2.0)
        assert total_mass(measure_add(mu, nu)) == pytest.approx(
            total_mass(mu) + total_mass(nu), rel=1e-12
        )

    def test_zero_measure(self):
        assert total_mass(zero_measure()) == 0.0
        assert format_measure_spec(zero_measure()) == ""

    def test_distance(self):
        assert measure_distance(dirac(1.0), dirac(1.0, 3.0)) == 2.0


class TestIntegrate:
    def test_atoms(self):
        g = Integrand(lambda lam: 2.0 * lam, at_zero=7.0, at_inf=11.0)
        assert integrate(dirac(1.0), g) == 2.0
        assert integrate(arithmetic_measure(), g) == 9.0

    def test_missing_endpoint_value(self):
        with pytest.raises(MissingEndpointValue):
            integrate(dirac(0.0), Integrand(lambda lam: lam))

    def test_geometric_density_reproduces_square_root(self):
        # sqrt(4) through the integral representation
        f = MeasureBacked(density_measure(GEOMETRIC))
        assert f(4.0) == pytest.approx(2.0, abs=1e-6)

    def test_logmean_density_reproduces_logarithmic_mean(self):
        f = MeasureBacked(density_measure(LOGMEAN))
        assert f(4.0) == pytest.approx(3.0 / math.log(4.0), abs=1e-6)


class TestOrder:
    def test_harmonic_below_arithmetic_fails_setwise(self):
        assert not measure_leq(dirac(1.0), arithmetic_measure())

    def test_atom_order(self):
        assert measure_leq(dirac(1.0, 0.5), dirac(1.0))
        assert not measure_leq(dirac(1.0), dirac(1.0, 0.5))

    def test_density_order(self):
        assert measure_leq(density_measure(GEOMETRIC, 0.5), density_measure(GEOMETRIC))

    def test_density_against_atoms_is_incomparable(self):
        with pytest.raises(IncomparableRepresentation):
            measure_leq(density_measure(GEOMETRIC), dirac(1.0))


class TestTextFormat:
    def test_parse(self):
        mu = parse_measure_spec("atom0 0.5\natomInf 0.5\n# comment\natom 2 0.25")
        assert mu.atom_zero == 0.5
        assert mu.atom_inf == 0.5
        assert mu.interior_atoms == ((2.0, 0.25),)

    def test_parse_density_with_weight_and_quad(self):
        mu = parse_measure_spec("density power 0.3 weight 2; quad 64 rational")
        assert mu.densities == ((2.0, power_density(0.3)),)
        assert mu.quad == QuadSpec(64, "rational")

    def test_atom_at_endpoints(self):
        mu = parse_measure_spec("atom 0 1; atom inf 2")
        assert (mu.atom_zero, mu.atom_inf) == (1.0, 2.0)

    @pytest.mark.parametrize(
        "text",
        ["atom 1", "density bogus", "atom0 -1", "atom -1 1", "quad 4", "mass 1"],
    )
    def test_malformed(self, text):
        with pytest.raises(SpecParseError):
            parse_measure_spec(text)

    def test_format(self):
        mu = measure_add(arithmetic_measure(), density_measure(GEOMETRIC))
        assert format_measure_spec(mu) == "atom0 0.5\natomInf 0.5\ndensity geometric\n"

    def test_load(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("atom 1 1\n")
        assert load_measure(path).interior_atoms == ((1.0, 1.0),)
        with pytest.raises(SpecParseError):
            load_measure(tmp_path / "missing.txt")


def random_measure(rng) -> RepMeasure:
    """Endpoint atoms, three interior atoms and a geometric density, all with random masses."""
    locations = np.sort(rng.uniform(0.1, 10.0, size=3))
    masses = rng.uniform(0.0, 2.0, size=3)
    return RepMeasure.build(
        atom_zero=float(rng.uniform()),
        atom_inf=float(rng.uniform()),
        atoms=[(float(x), float(m)) for x, m in zip(locations, masses, strict=True)],
        densities=[(float(rng.uniform()), GEOMETRIC)],
    )


SATURATING = Integrand(lambda lam: lam / (1.0 + lam), at_zero=0.0, at_inf=1.0)
DECAYING = Integrand(lambda lam: 1.0 / (1.0 + lam), at_zero=1.0, at_inf=0.0)


class TestIntegrateIsLinear:
    def test_in_the_measure(self, gen):
        for _ in range(10):
            mu, nu = random_measure(gen.rng), random_measure(gen.rng)
            k = float(gen.rng.uniform(0.1, 5.0))
            combined = measure_add(measure_scale(k, mu), nu)
            expected = k * integrate(mu, SATURATING) + integrate(nu, SATURATING)
            assert integrate(combined, SATURATING) == pytest.approx(expected, rel=1e-12)

    def test_in_the_integrand(self, gen):
        for _ in range(10):
            mu = random_measure(gen.rng)
            a, b = (float(c) for c in gen.rng.uniform(0.1, 5.0, size=2))
            g = Integrand(
                lambda lam, a=a, b=b: a * SATURATING.fn(lam) + b * DECAYING.fn(lam),
                at_zero=b,
                at_inf=a,
            )
            expected = a * integrate(mu, SATURATING) + b * integrate(mu, DECAYING)
            assert integrate(mu, g) == pytest.approx(expected, rel=1e-12)
