"""Deterministic SVG rendering of a map's graph.

The output is a plain unit-square plot: frame, diagonal for reference,
the map's polyline, and a dot per breakpoint.  Rendering is a pure
function of the breakpoint list — coordinates are produced by exact
integer arithmetic at fixed four-decimal precision, so identical maps
always give byte-identical documents.
"""

from __future__ import annotations

from .plmap import PLMap

__all__ = ["plot", "render_map_svg"]

_MARGIN = 24
_SIDE = 512
_CANVAS = _SIDE + 2 * _MARGIN


def _coord(r) -> str:
    """Fixed-point decimal of a rational in [0, CANVAS], exactly rounded down."""
    scaled = (r.numerator * 10000) // r.denominator
    whole, frac = divmod(scaled, 10000)
    return f"{whole}" if frac == 0 else f"{whole}.{frac:04d}".rstrip("0")


def _px(x) -> str:
    return _coord(_MARGIN + _SIDE * x)


def _py(y) -> str:
    return _coord(_MARGIN + _SIDE * (1 - y))


def render_map_svg(f: PLMap) -> str:
    pts = " ".join(f"{_px(x)},{_py(y)}" for x, y in f.breakpoints)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_CANVAS}" height="{_CANVAS}"'
        f' viewBox="0 0 {_CANVAS} {_CANVAS}">',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_SIDE}" height="{_SIDE}"'
        f' fill="white" stroke="black" stroke-width="1"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN + _SIDE}" x2="{_MARGIN + _SIDE}"'
        f' y2="{_MARGIN}" stroke="#bbbbbb" stroke-width="1"/>',
        f'<polyline points="{pts}" fill="none" stroke="#1a3faa" stroke-width="2"/>',
    ]
    for x, y in f.breakpoints:
        lines.append(f'<circle cx="{_px(x)}" cy="{_py(y)}" r="3" fill="#1a3faa"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def plot(f: PLMap, path) -> None:
    """Write the SVG for f; writing is binary so platforms agree byte-for-byte."""
    with open(path, "wb") as fh:
        fh.write(render_map_svg(f).encode("ascii"))
