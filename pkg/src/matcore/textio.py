"""
Plain-text matrix files.

Format: first line ``dim n``, then n rows of n whitespace-separated entries.
The symmetric part ``(M + M*)/2`` is enforced on load.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from src.errors import SpecParseError
from src.matcore.matrix import HermitianMatrix


def _parse_entry(token: str) -> complex | float:
    try:
        return float(token)
    except ValueError:
        pass
    try:
        return complex(token)
    except ValueError:
        raise SpecParseError(f"Invalid matrix entry: {token!r}") from None


def parse_matrix(text: str) -> HermitianMatrix:
    """Parse the ``dim n`` matrix format."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise SpecParseError("Empty matrix file")

    header = lines[0].split()
    if len(header) != 2 or header[0] != "dim":
        raise SpecParseError(f"Expected 'dim n' header, got {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise SpecParseError(f"Invalid dimension: {header[1]!r}") from None
    if n < 1:
        raise SpecParseError(f"Dimension must be positive, got {n}")

    rows = lines[1:]
    if len(rows) != n:
        raise SpecParseError(f"Expected {n} rows, got {len(rows)}")

    entries = []
    for i, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != n:
            raise SpecParseError(f"Row {i + 1}: expected {n} entries, got {len(tokens)}")
        entries.append([_parse_entry(t) for t in tokens])

    arr = np.array(entries)
    if not np.all(np.isfinite(arr)):
        raise SpecParseError("Matrix entries must be finite")
    return HermitianMatrix(arr, symmetrize=True)


def load_matrix(path: str | Path) -> HermitianMatrix:
    """Read a matrix file from disk."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecParseError(f"Cannot read matrix file {path}: {exc}") from exc
    return parse_matrix(text)


def _format_entry(value: complex | float, digits: int) -> str:
    if isinstance(value, complex) or np.iscomplexobj(value):
        value = complex(value)
        if value.imag == 0:
            value = value.real
        else:
            return f"{_format_entry(value.real, digits)}{value.imag:+.{digits}g}j"
    text = f"{float(value):.{digits}g}"
    return "0" if text == "-0" else text


def format_matrix(H: HermitianMatrix, digits: int = 12) -> str:
    """Render a matrix in the ``dim n`` format (deterministic output)."""
    lines = [f"dim {H.dim}"]
    for row in H.entries:
        lines.append(" ".join(_format_entry(v, digits) for v in row))
    return "\n".join(lines) + "\n"


def write_matrix(H: HermitianMatrix, path: str | Path, digits: int = 17) -> Path:
    """Write a matrix file; full precision by default so reloads are exact."""
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(format_matrix(H, digits=digits))
    return output_path
