"""
Measure spec text format.

One directive per line (``;`` also separates directives):

    atom0 <mass>
    atomInf <mass>
    atom <location> <mass>
    density <name> [param] [weight <w>]
    quad <nodes> [rational|log-tangent]
"""

from __future__ import annotations

from pathlib import Path

from src.errors import SpecParseError
from src.measures.densities import CatalogDensity
from src.measures.measure import RepMeasure, default_quad
from src.measures.quadrature import QuadSpec


def _number(token: str, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise SpecParseError(f"Invalid {what}: {token!r}") from None
    if value != value:
        raise SpecParseError(f"Invalid {what}: {token!r}")
    return value


def _mass(token: str) -> float:
    value = _number(token, "mass")
    if value < 0:
        raise SpecParseError(f"Mass must be nonnegative, got {token}")
    return value


def parse_measure_spec(text: str) -> RepMeasure:
    """Parse the measure directive format into a RepMeasure."""
    atom_zero = 0.0
    atom_inf = 0.0
    atoms: list[tuple[float, float]] = []
    densities: list[tuple[float, CatalogDensity]] = []
    quad: QuadSpec | None = None

    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]

        if keyword == "atom0" and len(args) == 1:
            atom_zero += _mass(args[0])
        elif keyword.lower() == "atominf" and len(args) == 1:
            atom_inf += _mass(args[0])
        elif keyword == "atom" and len(args) == 2:
            loc = _number(args[0], "location")
            if loc < 0:
                raise SpecParseError(f"Atom location must be in [0, inf], got {args[0]}")
            atoms.append((loc, _mass(args[1])))
        elif keyword == "density" and args:
            weight = 1.0
            if "weight" in args:
                idx = args.index("weight")
                if idx + 2 != len(args):
                    raise SpecParseError(f"Malformed density directive: {line!r}")
                weight = _mass(args[idx + 1])
                args = args[:idx]
            if len(args) not in (1, 2):
                raise SpecParseError(f"Malformed density directive: {line!r}")
            param = _number(args[1], "density parameter") if len(args) == 2 else None
            try:
                densities.append((weight, CatalogDensity(args[0], param)))
            except ValueError as exc:
                raise SpecParseError(str(exc)) from exc
        elif keyword == "quad" and len(args) in (1, 2):
            try:
                quad = QuadSpec(int(args[0]), *(args[1:] or [default_quad().substitution]))
            except ValueError as exc:
                raise SpecParseError(f"Malformed quad directive: {line!r} ({exc})") from exc
        else:
            raise SpecParseError(f"Unknown measure directive: {line!r}")

    try:
        return RepMeasure.build(atom_zero, atom_inf, atoms, densities, quad)
    except ValueError as exc:
        raise SpecParseError(str(exc)) from exc


def load_measure(path: str | Path) -> RepMeasure:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecParseError(f"Cannot read measure file {path}: {exc}") from exc
    return parse_measure_spec(text)


def format_measure_spec(mu: RepMeasure) -> str:
    """Render a measure as directive lines (empty string for the zero measure)."""
    lines = []
    if mu.atom_zero:
        lines.append(f"atom0 {mu.atom_zero:.12g}")
    if mu.atom_inf:
        lines.append(f"atomInf {mu.atom_inf:.12g}")
    for loc, mass in mu.interior_atoms:
        lines.append(f"atom {loc:.12g} {mass:.12g}")
    for weight, density in mu.densities:
        suffix = "" if weight == 1.0 else f" weight {weight:.12g}"
        lines.append(f"density {density.spec}{suffix}")
    return "".join(line + "\n" for line in lines)
