"""Reading and writing maps as plain breakpoint files.

A map file lists one breakpoint per line as two rationals, "x y", each
written p/q or as a bare integer.  '#' starts a comment, blank lines
are skipped, and the endpoint breakpoints (0,0) and (1,1) must be
written out — a file is the full breakpoint list, not a fragment.
Decimals are rejected: "0.1" does not mean 1/10 to a float, and this
package never guesses.
"""

from __future__ import annotations

import os

from .errors import FunctionFileError, InvalidMapError
from .plmap import PLMap
from .rational import format_rat, parse_rat

__all__ = ["parse_map_file", "parse_map_text", "serialize_map", "write_map_file"]


def parse_map_text(text: str, source: str = "<text>") -> PLMap:
    """Parse file content into a map; errors carry source and line."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FunctionFileError(
                f"{source}:{lineno}: expected two rationals 'x y', got {raw.strip()!r}"
            )
        try:
            x = parse_rat(tokens[0])
            y = parse_rat(tokens[1])
        except ValueError as exc:
            raise FunctionFileError(f"{source}:{lineno}: {exc}") from exc
        points.append((x, y))
    if not points:
        raise FunctionFileError(f"{source}: no breakpoints found")
    try:
        return PLMap(points)
    except InvalidMapError as exc:
        raise FunctionFileError(f"{source}: {exc}") from exc


def parse_map_file(path) -> PLMap:
    name = os.fspath(path)
    try:
        with open(name, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise FunctionFileError(f"{name}: {exc}") from exc
    return parse_map_text(text, source=name)


def serialize_map(f: PLMap) -> str:
    """Canonical text form; parse_map_text gives back the same map."""
    return "".join(f"{format_rat(x)} {format_rat(y)}\n" for x, y in f.breakpoints)


def write_map_file(f: PLMap, path) -> None:
    with open(os.fspath(path), "w", encoding="ascii") as fh:
        fh.write(serialize_map(f))
