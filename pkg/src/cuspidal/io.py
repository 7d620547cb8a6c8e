"""JSON file formats for configurations and Gale duals.

Configuration: ``{"matrix": [[...], ...], "homogenize": true|false}``.
Gale dual: ``{"matrix": [[...], ...]}`` with N rows and m columns.
Entries are integers or reduced rational strings ``"p/q"``.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from typing import IO

from .configuration import GaleDual, PointConfiguration, validate_normalize
from .errors import ParseError
from .linalg import Matrix, to_fraction


def read_text(source: str | None, stdin: IO[str] | None = None) -> str:
    """Contents of a file, or of standard input when source is None or "-"."""
    if source is None or source == "-":
        return (stdin or sys.stdin).read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read: {exc.strerror}", source) from exc


def load_json(text: str, where: str = "<input>") -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{where}:{exc.lineno}:{exc.colno}") from exc


def _entry(x, location: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected an integer or a \"p/q\" string, got {json.dumps(x)}", location)
    try:
        return to_fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {x!r}", location) from exc


def parse_matrix(doc, where: str = "<input>") -> Matrix:
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise ParseError("expected an object with a \"matrix\" field", where)
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows:
        raise ParseError("\"matrix\" must be a non-empty list of rows", f"{where}: matrix")
    width = None
    out = []
    for i, row in enumerate(rows):
        loc = f"{where}: matrix[{i}]"
        if not isinstance(row, list):
            raise ParseError("row is not a list", loc)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", loc)
        out.append([_entry(x, f"{loc}[{j}]") for j, x in enumerate(row)])
    return Matrix.from_rows(out, width)


def parse_config(text: str, where: str = "<input>") -> PointConfiguration:
    doc = load_json(text, where)
    raw = parse_matrix(doc, where)
    homogenize = doc.get("homogenize", False)
    if not isinstance(homogenize, bool):
        raise ParseError("\"homogenize\" must be true or false", f"{where}: homogenize")
    return validate_normalize(raw, homogenize)


def parse_gale(text: str, where: str = "<input>") -> GaleDual:
    return GaleDual(parse_matrix(load_json(text, where), where))


def encode_entry(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


def encode_matrix(M: Matrix) -> list[list]:
    return [[encode_entry(x) for x in M.row(i)] for i in range(M.rows)]


def config_to_dict(A: PointConfiguration) -> dict:
    return {"matrix": encode_matrix(A.matrix), "homogenize": False}


def gale_to_dict(B: GaleDual) -> dict:
    return {"matrix": encode_matrix(B.matrix)}


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))
