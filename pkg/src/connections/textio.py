"""
Connection spec grammar and the built-in catalog.

    mean arithmetic|geometric|harmonic|logarithmic|left|right
    parallel
    function <function-spec>
    measure <measure-file>
    scale <k> <spec>
    sum <spec> + <spec> [+ ...]

Inside ``sum`` a ``+`` separates connection terms only when it is followed
by a connection keyword, so function specs of the form
``sum 1 power 0.5 + 1 logmean`` nest unambiguously.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from src.connections.connection import (
    CATALOG_CONNECTIONS,
    Connection,
    Route,
    combination,
    conn_scale,
    from_function,
    from_measure,
    get_closed_form,
)
from src.connections.representation import representing_function, representing_measure
from src.errors import SpecParseError
from src.measures import format_measure_spec, load_measure
from src.monotone import format_function_spec, parse_function_spec

KEYWORDS = ("mean", "parallel", "function", "measure", "scale", "sum")
MEAN_NAMES = ("arithmetic", "geometric", "harmonic", "logarithmic", "left", "right")


def _split_sum(tokens: list[str]) -> list[list[str]]:
    parts: list[list[str]] = [[]]
    for i, token in enumerate(tokens):
        following = tokens[i + 1] if i + 1 < len(tokens) else ""
        if token == "+" and following in KEYWORDS:
            parts.append([])
        else:
            parts[-1].append(token)
    return parts


def _parse(tokens: list[str], base_dir: Path) -> Connection:
    if not tokens:
        raise SpecParseError("Empty connection spec")
    head, args = tokens[0], tokens[1:]

    if head == "mean":
        if len(args) != 1 or args[0] not in MEAN_NAMES:
            raise SpecParseError(f"Unknown mean: {' '.join(args)!r}")
        return get_closed_form(args[0])
    if head == "parallel":
        if args:
            raise SpecParseError("parallel takes no arguments")
        return get_closed_form("parallel_sum")
    if head == "function":
        return from_function(parse_function_spec(" ".join(args)))
    if head == "measure":
        if len(args) != 1:
            raise SpecParseError("measure takes exactly one file path")
        path = Path(args[0])
        if not path.is_absolute():
            path = base_dir / path
        return from_measure(load_measure(path), label=f"measure {args[0]}", source=path)
    if head == "scale":
        if len(args) < 2:
            raise SpecParseError("scale needs a factor and a spec")
        try:
            k = float(args[0])
        except ValueError:
            raise SpecParseError(f"Invalid scale factor: {args[0]!r}") from None
        if not k >= 0:
            raise SpecParseError(f"Scale factor must be nonnegative, got {args[0]}")
        return conn_scale(k, _parse(args[1:], base_dir))
    if head == "sum":
        parts = _split_sum(args)
        if any(not part for part in parts):
            raise SpecParseError("sum has an empty term")
        return combination([(1.0, _parse(part, base_dir)) for part in parts])
    raise SpecParseError(f"Unknown connection spec: {' '.join(tokens)!r}")


def parse_connection_spec(text: str, base_dir: str | Path | None = None) -> Connection:
    """Parse a connection spec; measure paths resolve against base_dir (default cwd)."""
    return _parse(text.split(), Path(base_dir) if base_dir is not None else Path.cwd())


def format_connection_spec(sigma: Connection) -> str:
    match sigma.route:
        case Route.CLOSED_FORM:
            return "parallel" if sigma.name == "parallel_sum" else f"mean {sigma.name}"
        case Route.FROM_FUNCTION:
            return f"function {format_function_spec(sigma.function)}"
        case Route.FROM_MEASURE:
            if sigma.source is None:
                raise SpecParseError(f"{sigma.label} was not loaded from a file")
            return f"measure {sigma.source}"
    if not sigma.terms:
        return "scale 0 mean arithmetic"
    parts = []
    for weight, tau in sigma.terms:
        text = format_connection_spec(tau)
        parts.append(text if weight == 1.0 else f"scale {weight:.12g} {text}")
    return parts[0] if len(parts) == 1 else "sum " + " + ".join(parts)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: str
    connection: Connection
    function_spec: str
    measure_spec: str


def catalog() -> list[CatalogEntry]:
    """The closed-form connections with their representing function and measure."""
    entries = []
    for name, sigma in CATALOG_CONNECTIONS.items():
        measure_text = format_measure_spec(representing_measure(sigma)).strip()
        entries.append(
            CatalogEntry(
                name=name,
                spec=format_connection_spec(sigma),
                connection=sigma,
                function_spec=format_function_spec(representing_function(sigma)),
                measure_spec=measure_text.replace("\n", "; "),
            )
        )
    return entries
