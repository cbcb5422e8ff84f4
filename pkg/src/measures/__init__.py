"""
The cone of finite Borel measures on [0, inf] with the total-variation norm.
"""

from src.measures.densities import GEOMETRIC, LOGMEAN, CatalogDensity, power_density
from src.measures.measure import (
    Integrand,
    RepMeasure,
    default_quad,
    density_measure,
    dirac,
    integrate,
    measure_add,
    measure_distance,
    measure_leq,
    measure_scale,
    total_mass,
    zero_measure,
)
from src.measures.quadrature import QuadSpec
from src.measures.textio import format_measure_spec, load_measure, parse_measure_spec

__all__ = [
    "GEOMETRIC",
    "LOGMEAN",
    "CatalogDensity",
    "Integrand",
    "QuadSpec",
    "RepMeasure",
    "default_quad",
    "density_measure",
    "dirac",
    "format_measure_spec",
    "integrate",
    "load_measure",
    "measure_add",
    "measure_distance",
    "measure_leq",
    "measure_scale",
    "parse_measure_spec",
    "power_density",
    "total_mass",
    "zero_measure",
]
