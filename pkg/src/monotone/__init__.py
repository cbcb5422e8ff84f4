"""
Operator monotone functions on R+ and the Loewner screen.
"""

from src.monotone.functions import (
    ARITHMETIC_F,
    DEFAULT_GRID,
    GEOMETRIC_F,
    HARMONIC_F,
    LOGARITHMIC_F,
    ZERO,
    Affine,
    ConeSum,
    Custom,
    LogMean,
    MeasureBacked,
    Moebius,
    OMFunction,
    Power,
    catalog_function,
    catalog_measure,
    kernel,
    omf_add,
    omf_distance,
    omf_eval,
    omf_leq,
    omf_norm,
    omf_scale,
    omf_sum,
    omf_validate,
)
from src.monotone.loewner import LoewnerVerdict, loewner_check, loewner_matrix, screen_points
from src.monotone.textio import format_function_spec, parse_function_spec


def slope_at_infinity(f: OMFunction) -> float:
    return f.slope_at_infinity()


__all__ = [
    "ARITHMETIC_F",
    "DEFAULT_GRID",
    "GEOMETRIC_F",
    "HARMONIC_F",
    "LOGARITHMIC_F",
    "ZERO",
    "Affine",
    "ConeSum",
    "Custom",
    "LoewnerVerdict",
    "LogMean",
    "MeasureBacked",
    "Moebius",
    "OMFunction",
    "Power",
    "catalog_function",
    "catalog_measure",
    "format_function_spec",
    "kernel",
    "loewner_check",
    "loewner_matrix",
    "omf_add",
    "omf_distance",
    "omf_eval",
    "omf_leq",
    "omf_norm",
    "omf_scale",
    "omf_sum",
    "omf_validate",
    "parse_function_spec",
    "screen_points",
    "slope_at_infinity",
]
