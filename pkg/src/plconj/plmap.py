"""Orientation-preserving piecewise-linear homeomorphisms of [0, 1].

A map is stored as its breakpoint list in normal form: the endpoints
(0, 0) and (1, 1) are always present, all coordinates are exact
rationals, both coordinate sequences are strictly increasing, and no
interior breakpoint is collinear with its neighbours.  Normal form makes
equality of maps literal equality of breakpoint tuples, which the whole
package leans on: conjugators, certificates and roots are compared
breakpoint by breakpoint, never numerically.

Composition is written multiplicatively, ``(f * g)(t) == f(g(t))``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, InvalidMapError
from .rational import ONE, Rat, ZERO, format_rat, rat

__all__ = [
    "BumpClass",
    "BumpKind",
    "PLMap",
    "classify",
    "compose",
    "evaluate",
    "final_slope",
    "identity",
    "initial_slope",
    "invert",
    "power",
]


def _collinear(p, q, r) -> bool:
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


def _normalized(points):
    """Drop interior points collinear with their neighbours."""
    out = []
    for pt in points:
        while len(out) >= 2 and _collinear(out[-2], out[-1], pt):
            out.pop()
        out.append(pt)
    return out


class PLMap:
    """A PL homeomorphism of [0, 1] in breakpoint normal form."""

    __slots__ = ("_bps", "_xs", "_ys")

    def __init__(self, breakpoints):
        pts = [(rat(x), rat(y)) for x, y in breakpoints]
        if len(pts) < 2:
            raise InvalidMapError("a map needs at least the two endpoint breakpoints")
        if pts[0] != (ZERO, ZERO) or pts[-1] != (ONE, ONE):
            raise InvalidMapError("breakpoint list must start at (0, 0) and end at (1, 1)")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise InvalidMapError("x-coordinates must be strictly increasing")
            if y1 <= y0:
                raise InvalidMapError("y-coordinates must be strictly increasing")
        bps = tuple(_normalized(pts))
        self._bps = bps
        self._xs = tuple(p[0] for p in bps)
        self._ys = tuple(p[1] for p in bps)

    @property
    def breakpoints(self) -> tuple:
        return self._bps

    def __len__(self) -> int:
        return len(self._bps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLMap):
            return NotImplemented
        return self._bps == other._bps

    def __hash__(self) -> int:
        return hash(self._bps)

    def __repr__(self) -> str:
        inner = ", ".join(f"({format_rat(x)}, {format_rat(y)})" for x, y in self._bps)
        return f"PLMap([{inner}])"

    def evaluate(self, t) -> Rat:
        t = rat(t)
        if t < ZERO or t > ONE:
            raise DomainError("argument outside [0, 1]")
        i = bisect_left(self._xs, t)
        if self._xs[i] == t:
            return self._ys[i]
        x0, y0 = self._xs[i - 1], self._ys[i - 1]
        x1, y1 = self._xs[i], self._ys[i]
        return y0 + (t - x0) * (y1 - y0) / (x1 - x0)

    __call__ = evaluate

    def inverse(self) -> "PLMap":
        """The inverse homeomorphism: the breakpoint graph reflected."""
        return PLMap([(y, x) for x, y in self._bps])

    def compose(self, inner: "PLMap") -> "PLMap":
        return compose(self, inner)

    __mul__ = compose

    def power(self, n: int) -> "PLMap":
        return power(self, n)

    __pow__ = power

    @property
    def initial_slope(self) -> Rat:
        return self._ys[1] / self._xs[1]

    @property
    def final_slope(self) -> Rat:
        return (ONE - self._ys[-2]) / (ONE - self._xs[-2])

    def classify(self) -> "BumpClass":
        return classify(self)

    @property
    def is_identity(self) -> bool:
        return len(self._bps) == 2


_IDENTITY = PLMap(((0, 0), (1, 1)))


def identity() -> PLMap:
    """The identity map, the unit of composition."""
    return _IDENTITY


def _sweep_eval(xs, ys, queries):
    """Evaluate the polyline (xs, ys) at an ascending list of queries.

    The current segment's slope is cached: consecutive queries usually
    land on the same segment, and the division is the expensive part.
    """
    out = []
    i = 1
    slope = None
    for q in queries:
        while xs[i] < q:
            i += 1
            slope = None
        if xs[i] == q:
            out.append(ys[i])
        else:
            if slope is None:
                slope = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1])
            out.append(ys[i - 1] + (q - xs[i - 1]) * slope)
    return out


def _merge_sorted(a, b):
    out = []
    i = j = 0
    while i < len(a) or j < len(b):
        if j >= len(b) or (i < len(a) and a[i] <= b[j]):
            v = a[i]
            i += 1
        else:
            v = b[j]
            j += 1
        if not out or out[-1] != v:
            out.append(v)
    return out


def evaluate(f: PLMap, t) -> Rat:
    return f.evaluate(t)


def invert(f: PLMap) -> PLMap:
    return f.inverse()


def compose(outer: PLMap, inner: PLMap) -> PLMap:
    """The composition outer∘inner, in normal form.

    Candidate breakpoints are inner's breakpoints together with the
    inner-preimages of outer's; both lists are already sorted, so one
    merge and two linear sweeps give the exact result.
    """
    preimages = _sweep_eval(inner._ys, inner._xs, outer._xs[1:-1])
    xs = _merge_sorted(list(inner._xs), preimages)
    mids = _sweep_eval(inner._xs, inner._ys, xs)
    vals = _sweep_eval(outer._xs, outer._ys, mids)
    result = PLMap(zip(xs, vals))
    assert len(result) <= len(outer) + len(inner)
    return result


def power(f: PLMap, n: int) -> PLMap:
    """The n-th compositional power, by iterated composition.

    Iterating (rather than squaring) keeps every intermediate in normal
    form, so breakpoint counts grow at most linearly in n; the loop
    asserts that bound.
    """
    if not isinstance(n, int):
        raise TypeError("exponent must be an integer")
    if n == 0:
        return _IDENTITY
    if n < 0:
        return power(f.inverse(), -n)
    interior = len(f) - 2
    result = f
    for k in range(2, n + 1):
        result = compose(result, f)
        assert len(result) <= 2 + k * interior
    return result


class BumpKind(Enum):
    IDENTITY = "identity"
    ABOVE = "above-diagonal"
    BELOW = "below-diagonal"
    CROSSING = "crossing"


@dataclass(frozen=True)
class BumpClass:
    """Position of a map relative to the diagonal.

    For a crossing map, ``fixed`` lists the interior fixed set: isolated
    points as rationals and maximal fixed intervals as (lo, hi) pairs,
    in increasing order.
    """

    kind: BumpKind
    fixed: tuple = ()

    @property
    def is_one_bump(self) -> bool:
        return self.kind in (BumpKind.ABOVE, BumpKind.BELOW)


def classify(f: PLMap) -> BumpClass:
    """Decide where the graph of ``f`` sits relative to the diagonal.

    On each segment the deviation f(t) - t is linear, so its zero set is
    empty, a point, or the whole segment; collecting and merging those
    zero sets over all segments gives the complete interior fixed set.
    """
    if f.is_identity:
        return BumpClass(BumpKind.IDENTITY)
    spans = []
    xs, ys = f._xs, f._ys
    for i in range(len(xs) - 1):
        x0, y0, x1, y1 = xs[i], ys[i], xs[i + 1], ys[i + 1]
        d0, d1 = y0 - x0, y1 - x1
        if d0 == 0 and d1 == 0:
            spans.append([x0, x1])
        elif d0 == 0:
            spans.append([x0, x0])
        elif d1 == 0:
            spans.append([x1, x1])
        elif (d0 < 0) != (d1 < 0):
            t = x0 + (x1 - x0) * d0 / (d0 - d1)
            spans.append([t, t])
    merged = []
    for lo, hi in spans:  # spans arrive sorted by construction
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    interior = [
        (lo, hi)
        for lo, hi in merged
        if not (lo == hi and (lo == ZERO or lo == ONE))
    ]
    if not interior:
        above = ys[1] > xs[1]
        return BumpClass(BumpKind.ABOVE if above else BumpKind.BELOW)
    witnesses = tuple(lo if lo == hi else (lo, hi) for lo, hi in interior)
    return BumpClass(BumpKind.CROSSING, witnesses)


def initial_slope(f: PLMap) -> Rat:
    return f.initial_slope


def final_slope(f: PLMap) -> Rat:
    return f.final_slope
