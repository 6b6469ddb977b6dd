"""Reading and writing fractions, tables, moves, and margin vectors.

Two fraction formats.  Grid: an optional "I J" header line, then I lines
of J characters from {0,1}.  JSON: {"I": int, "J": int, "points":
[[i, j], ...]} with 1-based coordinates, one object per line when
streamed.  The format of an input is auto-detected: a first
non-whitespace '{' means JSON.
"""
from __future__ import annotations

import json
import sys
from typing import Iterable

from .design import Point, Points, Table, fraction, to_table


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


def _parse_json(text: str) -> tuple[Points, int, int]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad JSON: {e.msg}", line=e.lineno, column=e.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("JSON input must be an object with I, J, points")
    for key in ("I", "J", "points"):
        if key not in obj:
            raise ParseError(f"JSON input missing key {key!r}")
    I, J, raw = obj["I"], obj["J"], obj["points"]
    if not isinstance(I, int) or not isinstance(J, int):
        raise ParseError("I and J must be integers")
    if not isinstance(raw, list):
        raise ParseError("points must be a list of [i, j] pairs")
    pts = []
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 2
                and all(isinstance(x, int) for x in entry)):
            raise ParseError(f"point {entry!r} is not an [i, j] integer pair")
        pts.append((entry[0], entry[1]))
    try:
        return fraction(pts, I, J), I, J
    except ValueError as e:
        raise ParseError(str(e)) from None


def _parse_grid(text: str) -> tuple[Points, int, int]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input")
    header = None
    body_start = 0
    tokens = lines[0].split()
    if len(tokens) == 2 and all(t.lstrip("-").isdigit() for t in tokens):
        header = (int(tokens[0]), int(tokens[1]))
        body_start = 1
    body = lines[body_start:]
    if not body:
        raise ParseError("header without grid rows", line=1)
    if header is not None and len(body) != header[0]:
        raise ParseError(
            f"header says {header[0]} rows but the grid has {len(body)}", line=1
        )
    I = len(body)
    J = header[1] if header is not None else len(body[0].strip())
    pts = []
    for r, rawline in enumerate(body):
        lineno = body_start + r + 1
        row = rawline.strip()
        if len(row) != J:
            raise ParseError(f"expected {J} characters, found {len(row)}", line=lineno)
        for c, ch in enumerate(row):
            if ch == "1":
                pts.append((r + 1, c + 1))
            elif ch != "0":
                raise ParseError(f"invalid character {ch!r}", line=lineno, column=c + 1)
    try:
        return fraction(pts, I, J), I, J
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_fraction_text(text: str) -> tuple[Points, int, int]:
    """Parse either format, returning (points, I, J)."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input")
    if stripped[0] == "{":
        return _parse_json(text)
    return _parse_grid(text)


def parse_fraction_file(path: str) -> tuple[Points, int, int]:
    """Read a fraction from a file path, or standard input for '-'."""
    if path == "-":
        return parse_fraction_text(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_fraction_text(fh.read())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def parse_margin_vector(text: str) -> tuple[int, ...]:
    """Comma-separated margin list, e.g. '3,1,2'."""
    parts = [p.strip() for p in text.split(",")]
    if not all(p.lstrip("-").isdigit() for p in parts):
        raise ParseError(f"bad margin list {text!r}: expected comma-separated integers")
    return tuple(int(p) for p in parts)


def render_grid(points: Iterable[Point], I: int, J: int, header: bool = True) -> str:
    """Grid text of a fraction, newline-terminated, header included by default."""
    table = to_table(points, I, J)
    lines = [f"{I} {J}"] if header else []
    lines.extend("".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def render_json(points: Iterable[Point], I: int, J: int) -> str:
    """One-line JSON object for a fraction."""
    f = fraction(points, I, J)
    return json.dumps({"I": I, "J": J, "points": [[i, j] for i, j in f]})


def render_signed_table(table: Table) -> str:
    """Integer grid with aligned signs, for moves: rows of space-separated values."""
    return "\n".join(" ".join(str(v) for v in row) for row in table) + "\n"
