"""
Function spec grammar.

    affine <a> <b> | power <alpha> | logmean | moebius <lambda>
    sum <w1> <spec1> + <w2> <spec2> [+ ...]

Sum terms are non-sum specs.
"""

from __future__ import annotations

from src.errors import DomainError, SpecParseError
from src.monotone.functions import (
    Affine,
    ConeSum,
    Custom,
    LogMean,
    MeasureBacked,
    Moebius,
    OMFunction,
    Power,
    _fmt,
    catalog_function,
)


def _float(token: str, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise SpecParseError(f"Invalid {what}: {token!r}") from None
    if value != value:
        raise SpecParseError(f"Invalid {what}: {token!r}")
    return value


def _parse_atomic(tokens: list[str], text: str) -> OMFunction:
    if not tokens:
        raise SpecParseError(f"Empty function spec in {text!r}")
    head, args = tokens[0].lower(), tokens[1:]
    try:
        if head == "affine" and len(args) == 2:
            return Affine(_float(args[0], "affine a"), _float(args[1], "affine b"))
        if head == "power" and len(args) == 1:
            return Power(_float(args[0], "power exponent"))
        if head == "logmean" and not args:
            return LogMean()
        if head == "moebius" and len(args) == 1:
            return Moebius(_float(args[0], "moebius parameter"))
    except SpecParseError:
        raise
    except (ValueError, DomainError) as exc:
        raise SpecParseError(str(exc)) from exc
    raise SpecParseError(f"Unknown function spec: {' '.join(tokens)!r}")


def parse_function_spec(text: str) -> OMFunction:
    tokens = text.split()
    if not tokens:
        raise SpecParseError("Empty function spec")
    if tokens[0].lower() != "sum":
        return _parse_atomic(tokens, text)

    body = " ".join(tokens[1:])
    if not body:
        raise SpecParseError("sum needs at least one term")
    terms = []
    for part in body.split("+"):
        words = part.split()
        if len(words) < 2:
            raise SpecParseError(f"Malformed sum term: {part.strip()!r}")
        weight = _float(words[0], "sum weight")
        if weight < 0:
            raise SpecParseError(f"Sum weights must be nonnegative, got {words[0]}")
        if words[1].lower() == "sum":
            raise SpecParseError("Nested sums are not supported")
        terms.append((weight, _parse_atomic(words[1:], text)))
    return ConeSum(tuple(terms))


def format_function_spec(f: OMFunction) -> str:
    """Inverse of parse_function_spec for catalog functions."""
    if isinstance(f, MeasureBacked):
        return format_function_spec(catalog_function(f.measure))
    if isinstance(f, Custom):
        raise SpecParseError(f"Custom function {f.label!r} has no text spec")
    if isinstance(f, ConeSum):
        flat = _flatten_all(f)
        if not flat:
            return "affine 0 0"
        return "sum " + " + ".join(f"{_fmt(w)} {format_function_spec(g)}" for w, g in flat)
    return f.label


def _flatten_all(f: ConeSum) -> list[tuple[float, OMFunction]]:
    flat: list[tuple[float, OMFunction]] = []
    for weight, g in f.terms:
        if isinstance(g, MeasureBacked):
            g = catalog_function(g.measure)
        if isinstance(g, ConeSum):
            flat.extend((weight * w, h) for w, h in _flatten_all(g))
        else:
            flat.append((weight, g))
    return flat
