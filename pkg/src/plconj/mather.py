"""Mather invariants of above-diagonal one-bump maps, kept exact.

Near 0 an above-diagonal map z acts like multiplication by m0 = z'(0),
and near 1 like t ↦ 1 − m1·(1 − t) with m1 = z'(1).  Quotienting a
punctured neighbourhood of 0 by t ~ m0·t and one of 1 by
(1 − t) ~ m1·(1 − t) gives two circles, and a high power of z induces a
well-defined map between them.  That induced map, up to rotations of
the two circles, is a complete conjugacy invariant for the pair of
endpoint slopes.

Everything here stays multiplicative so it stays rational: a point of
the domain circle is a positive rational modulo m0^ℤ, a point of the
range circle is one modulo m1^ℤ (measured as distance below 1), and
rotations are multiplications.  The invariant itself is stored as one
fundamental domain [anchor, m0·anchor] of the equivariant function
Û(t) = 1 − zᴺ(t), extended everywhere by Û(t/m0) = Û(t)/m1.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import (
    DomainError,
    InternalConsistencyError,
    NotAboveDiagonal,
    OutOfRange,
    ScaleMismatch,
)
from .plmap import BumpKind, PLMap, _normalized, classify
from .rational import ONE, Rat, rat

__all__ = [
    "MatherGerm",
    "RotationPair",
    "germ_breakpoint_classes",
    "germ_eval",
    "mather_invariant",
    "rotation_equivalent",
    "self_rotation_classes",
]


@dataclass(frozen=True)
class MatherGerm:
    """One fundamental domain of the equivariant germ of zᴺ near 1.

    profile is the breakpoint list of V(t) = 1 − zᴺ(t) on
    [anchor, m0·anchor]: strictly increasing in t, strictly decreasing
    in value, in normal form, with the seam identity
    V(m0·anchor) = m1·V(anchor) tying the two ends together.  steps
    records the power N used; germs for different N differ by a power
    of m1 and represent the same invariant.
    """

    m0: Rat
    m1: Rat
    anchor: Rat
    profile: tuple
    steps: int

    def __post_init__(self):
        if not self.m0 > 1:
            raise InternalConsistencyError("germ scale m0 must exceed 1")
        if not 0 < self.m1 < 1:
            raise InternalConsistencyError("germ scale m1 must lie in (0, 1)")
        if not self.anchor > 0:
            raise InternalConsistencyError("germ anchor must be positive")
        pts = self.profile
        if len(pts) < 2:
            raise InternalConsistencyError("germ profile needs at least two points")
        if pts[0][0] != self.anchor or pts[-1][0] != self.m0 * self.anchor:
            raise InternalConsistencyError("germ profile must span one period exactly")
        for (x0, v0), (x1, v1) in zip(pts, pts[1:]):
            if x1 <= x0 or v1 >= v0:
                raise InternalConsistencyError("germ profile must strictly decrease")
        if not (0 < pts[-1][1] and pts[0][1] < 1):
            raise InternalConsistencyError("germ values must lie in (0, 1)")
        if pts[-1][1] != self.m1 * pts[0][1]:
            raise InternalConsistencyError("germ seam identity violated")

    @property
    def period_end(self) -> Rat:
        return self.m0 * self.anchor


def mather_invariant(z: PLMap, *, steps: int | None = None, anchor=None) -> MatherGerm:
    """The Mather germ of an above-diagonal map.

    The default anchor is a0/m0 with a0 the right end of z's initial
    linear segment, and the default power is the smallest N with
    zᴺ(anchor) inside z's final linear region — the smallest power for
    which the seam identity can hold.  Both can be overridden (a larger
    N, a smaller anchor) to exercise the representation-independence of
    the invariant; the germ records whatever was used.
    """
    if classify(z).kind is not BumpKind.ABOVE:
        raise NotAboveDiagonal("the germ is defined for above-diagonal maps")
    m0 = z.initial_slope
    m1 = z.final_slope
    a0 = z.breakpoints[1][0]
    final_lo = z.breakpoints[-2][0]
    if anchor is None:
        anchor = a0 / m0
    else:
        anchor = rat(anchor)
        if not 0 < anchor * m0 <= a0:
            raise DomainError(
                f"anchor must satisfy 0 < m0*anchor <= {a0}, got anchor = {anchor}"
            )
    z_bp_xs = [p[0] for p in z.breakpoints[1:-1]]

    # Track the graph of zᵏ on [anchor, m0*anchor], inserting a domain
    # point whenever a value is about to cross one of z's breakpoints,
    # so every application of z is linear on every tracked segment.
    xs = [anchor, m0 * anchor]
    vs = [anchor, m0 * anchor]
    n = 0
    minimal: int | None = None
    while True:
        if vs[0] >= final_lo and minimal is None:
            minimal = n
        if steps is None:
            if minimal is not None:
                break
        elif n == steps:
            break
        lo = bisect_left(z_bp_xs, vs[0])
        for i in range(lo, len(z_bp_xs)):
            b = z_bp_xs[i]
            if b >= vs[-1]:
                break
            j = bisect_left(vs, b)
            if vs[j] != b:
                x0, v0, x1, v1 = xs[j - 1], vs[j - 1], xs[j], vs[j]
                t = x0 + (x1 - x0) * (b - v0) / (v1 - v0)
                xs.insert(j, t)
                vs.insert(j, b)
        vs = [z(v) for v in vs]
        n += 1
    if steps is not None and (minimal is None or steps < minimal):
        raise DomainError(
            f"steps = {steps} is below the minimal usable power for this map"
        )

    profile = _normalized([(x, ONE - v) for x, v in zip(xs, vs)])
    return MatherGerm(m0, m1, anchor, tuple(profile), n)


def _profile_value(germ: MatherGerm, t: Rat) -> Rat:
    pts = germ.profile
    i = bisect_left(pts, (t,))
    if i < len(pts) and pts[i][0] == t:
        return pts[i][1]
    (x0, v0), (x1, v1) = pts[i - 1], pts[i]
    return v0 + (t - x0) * (v1 - v0) / (x1 - x0)


def germ_eval(germ: MatherGerm, t, *, max_periods: int = 4096) -> Rat:
    """Evaluate the equivariant extension Û at any positive t.

    t is first reduced into [anchor, m0·anchor) by multiplying with a
    power of m0, and the value is scaled back by the matching power of
    m1.  The reduction is capped at max_periods steps; beyond that the
    argument is declared out of the representable range.
    """
    t = rat(t)
    if t <= 0:
        raise DomainError("germ arguments must be positive")
    lo = germ.anchor
    hi = germ.period_end
    j = 0
    while t < lo:
        t *= germ.m0
        j += 1
        if j > max_periods:
            raise OutOfRange(f"argument needs more than {max_periods} periods")
    while t >= hi:
        t /= germ.m0
        j -= 1
        if -j > max_periods:
            raise OutOfRange(f"argument needs more than {max_periods} periods")
    return _profile_value(germ, t) * germ.m1 ** (-j)


def germ_breakpoint_classes(germ: MatherGerm) -> tuple:
    """Slope discontinuities of Û, one representative per period.

    Interior kinks of the profile give classes directly; the seam
    contributes the anchor's class when the profile's outgoing slope at
    the period end, pulled back one period by the equivariance rule,
    differs from the incoming slope at the anchor.  The result is never
    empty: a kink-free germ would force m0 = m1.
    """
    pts = germ.profile
    classes = [x for x, _ in pts[1:-1]]
    first_slope = (pts[1][1] - pts[0][1]) / (pts[1][0] - pts[0][0])
    last_slope = (pts[-1][1] - pts[-2][1]) / (pts[-1][0] - pts[-2][0])
    if last_slope != (germ.m1 / germ.m0) * first_slope:
        classes.insert(0, germ.anchor)
    if not classes:
        raise InternalConsistencyError("a germ cannot be kink-free")
    return tuple(sorted(classes))


@dataclass(frozen=True)
class RotationPair:
    """Rotations aligning two germs: rot0 turns the circle at 0, rot1
    the circle at 1.  Both are reduced class representatives, rot0 in
    [1, m0) and rot1 in (m1, 1]."""

    rot0: Rat
    rot1: Rat


def _reduce_into(x: Rat, lo: Rat, hi: Rat, m: Rat) -> Rat:
    """Scale x by powers of m into the half-open window [lo, hi)."""
    while x < lo:
        x *= m
    while x >= hi:
        x /= m
    return x


def _rotation_factor(gy: MatherGerm, gz: MatherGerm, k: Rat) -> Rat | None:
    """The factor l with Û_y(k·t) = l·Û_z(t), or None if there is none.

    Both sides are piecewise linear in t over one period of gz and obey
    the same scaling across periods, so exact agreement on a grid
    holding every kink of either side proves agreement everywhere.
    """
    lo = gz.anchor
    hi = gz.period_end
    grid = {lo}
    grid.update(germ_breakpoint_classes(gz))
    for c in germ_breakpoint_classes(gy):
        grid.add(_reduce_into(c / k, lo, hi, gz.m0))
    factor = germ_eval(gy, k * lo) / germ_eval(gz, lo)
    for t in grid:
        if germ_eval(gy, k * t) != factor * germ_eval(gz, t):
            return None
    return factor


def rotation_equivalent(gy: MatherGerm, gz: MatherGerm) -> RotationPair | None:
    """Rotations carrying one germ to the other, if any exist.

    A valid rotation must map kink classes to kink classes bijectively,
    so fixing one class of gz, the candidates for rot0 are its ratios
    against each class of gy — finitely many.  Each candidate forces
    the range rotation from a single sample; an exact full-period check
    accepts or rejects it.
    """
    if gy.m0 != gz.m0:
        raise ScaleMismatch(f"domain scales differ: {gy.m0} vs {gz.m0}")
    if gy.m1 != gz.m1:
        raise ScaleMismatch(f"range scales differ: {gy.m1} vs {gz.m1}")
    classes_y = germ_breakpoint_classes(gy)
    classes_z = germ_breakpoint_classes(gz)
    if len(classes_y) != len(classes_z):
        return None
    base = classes_z[0]
    seen = set()
    for b in classes_y:
        k = _reduce_into(b / base, rat(1), gy.m0, gy.m0)
        if k in seen:
            continue
        seen.add(k)
        factor = _rotation_factor(gy, gz, k)
        if factor is not None:
            # The window for rot1 is the half-open (m1, 1] read from the
            # top: reduce into [m1, 1) first, then shift an exact m1 up.
            rot1 = _reduce_into(factor, gy.m1, rat(1), 1 / gy.m1)
            if rot1 == gy.m1:
                rot1 = rat(1)
            return RotationPair(k, rot1)
    return None


def self_rotation_classes(germ: MatherGerm) -> tuple:
    """All rotations of the circle at 0 carrying the germ to itself.

    Returned as reduced representatives in [1, m0), sorted; always
    contains 1.  These form a cyclic group under multiplication
    modulo m0^ℤ — the germ side of the centralizer computation.
    """
    classes = germ_breakpoint_classes(germ)
    base = classes[0]
    out = []
    for b in classes:
        k = _reduce_into(b / base, rat(1), germ.m0, germ.m0)
        if k not in out and _rotation_factor(germ, germ, k) is not None:
            out.append(k)
    if rat(1) not in out:
        raise InternalConsistencyError("the identity rotation must be valid")
    return tuple(sorted(out))
