"""Candidate conjugators for below-diagonal one-bump maps.

Given two below-diagonal maps y and z with matching endpoint slopes,
any conjugator g (a map with g⁻¹∘y∘g = z) is linear on the common
initial box [0, alpha]² and on the common final box [beta, 1]², and it
is completely determined by its initial slope q.  The stair algorithm
builds that unique candidate as g = y⁻ᴺ∘g₀∘zᴺ on [0, z⁻ᴺ(alpha)] for a
seed g₀ of slope q and the smallest N that pushes both z⁻ᴺ(alpha) and
y⁻ᴺ(q·alpha) past beta, then extends it by a straight line to (1, 1).
Whether the candidate really conjugates is a separate exact check.

The construction here never composes full maps.  It grows the candidate
band by band: on (s_k, s_{k+1}] with s_k = z⁻ᵏ(alpha) the candidate
satisfies g(t) = y⁻¹(g(z(t))), and z maps each band onto the previous
one, so every band is computed from the finished prefix in time
proportional to its own breakpoint count.  That keeps the whole run
linear in N times the breakpoint counts instead of quadratic.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .errors import (
    ClassMismatch,
    DomainError,
    InvalidSlope,
    NotOneBump,
    PrefixMismatch,
    SlopeMismatch,
)
from .plmap import BumpKind, PLMap, classify, compose, invert, power
from .rational import ONE, Rat, ZERO, rat

__all__ = [
    "LinearityBoxes",
    "StairParams",
    "conjugates_powers",
    "conjugator_with_slope",
    "identification_step",
    "linearity_boxes",
    "stair_candidate",
    "stair_parameters",
    "verify_conjugator",
]


@dataclass(frozen=True)
class LinearityBoxes:
    """Common linearity data of a pair of below-diagonal maps.

    Both maps equal initial_slope·t on [0, alpha] and are linear with
    slope final_slope through (1, 1) on [beta, 1]; any conjugator of the
    pair is linear inside the two corresponding boxes.
    """

    alpha: Rat
    beta: Rat
    initial_slope: Rat
    final_slope: Rat


@dataclass(frozen=True)
class StairParams:
    """The data the stair construction commits to for one run."""

    steps: int
    slope: Rat
    seed: PLMap


def _require_kind(f: PLMap, kind: BumpKind, what: str) -> None:
    found = classify(f).kind
    if found is not kind:
        raise NotOneBump(f"{what} must be {kind.value}, got {found.value}")


def linearity_boxes(y: PLMap, z: PLMap) -> LinearityBoxes:
    """Largest common initial and final boxes of a below-diagonal pair."""
    if y.initial_slope != z.initial_slope:
        raise SlopeMismatch(
            f"initial slopes differ: {y.initial_slope} vs {z.initial_slope}"
        )
    if y.final_slope != z.final_slope:
        raise SlopeMismatch(f"final slopes differ: {y.final_slope} vs {z.final_slope}")
    _require_kind(y, BumpKind.BELOW, "first map")
    _require_kind(z, BumpKind.BELOW, "second map")
    alpha = min(y.breakpoints[1][0], z.breakpoints[1][0])
    beta = max(y.breakpoints[-2][0], z.breakpoints[-2][0])
    return LinearityBoxes(alpha, beta, y.initial_slope, y.final_slope)


def _canonical_seed(alpha: Rat, q: Rat) -> PLMap:
    return PLMap(((ZERO, ZERO), (alpha, q * alpha), (ONE, ONE)))


def stair_parameters(y: PLMap, z: PLMap, q) -> StairParams:
    """The step count and canonical seed the stair uses for slope q.

    The step count is the smallest N with both z⁻ᴺ(alpha) and
    y⁻ᴺ(q·alpha) beyond beta; it is minimal by construction, with no
    safety margin.  Only slopes 0 < q ≤ 1 have parameters; the q > 1
    case is solved through the swapped pair.
    """
    q = rat(q)
    boxes = linearity_boxes(y, z)
    if q <= 0:
        raise InvalidSlope(f"conjugator slope must be positive, got {q}")
    if q > 1:
        raise InvalidSlope("parameters exist for slopes <= 1; swap the pair for q > 1")
    y_inv = invert(y)
    z_inv = invert(z)
    a = boxes.alpha
    b = q * boxes.alpha
    steps = 0
    while a <= boxes.beta or b <= boxes.beta:
        a = z_inv(a)
        b = y_inv(b)
        steps += 1
    return StairParams(steps, q, _canonical_seed(boxes.alpha, q))


class _Accumulator:
    """Breakpoint list under construction, kept in normal form."""

    def __init__(self):
        self.xs = []
        self.ys = []

    def append(self, x: Rat, y: Rat) -> None:
        xs, ys = self.xs, self.ys
        assert not xs or x > xs[-1]
        while len(xs) >= 2 and (ys[-1] - ys[-2]) * (x - xs[-1]) == (y - ys[-1]) * (
            xs[-1] - xs[-2]
        ):
            xs.pop()
            ys.pop()
        xs.append(x)
        ys.append(y)

    def value_at(self, u: Rat) -> Rat:
        i = bisect_left(self.xs, u)
        if self.xs[i] == u:
            return self.ys[i]
        x0, y0, x1, y1 = self.xs[i - 1], self.ys[i - 1], self.xs[i], self.ys[i]
        return y0 + (u - x0) * (y1 - y0) / (x1 - x0)

    def argument_at(self, v: Rat) -> Rat:
        i = bisect_left(self.ys, v)
        if self.ys[i] == v:
            return self.xs[i]
        x0, y0, x1, y1 = self.xs[i - 1], self.ys[i - 1], self.xs[i], self.ys[i]
        return x0 + (v - y0) * (x1 - x0) / (y1 - y0)


def stair_candidate(y: PLMap, z: PLMap, q) -> PLMap:
    """The unique candidate conjugator of y to z with initial slope q.

    If any conjugator with initial slope q exists, it equals the map
    returned here; the converse is checked by verify_conjugator.  Slopes
    q > 1 are reduced to the swapped problem: a conjugator of y to z
    with slope q inverts to a conjugator of z to y with slope 1/q.
    """
    q = rat(q)
    if q <= 0:
        raise InvalidSlope(f"conjugator slope must be positive, got {q}")
    if q > 1:
        return invert(stair_candidate(z, y, 1 / q))
    boxes = linearity_boxes(y, z)
    alpha, beta = boxes.alpha, boxes.beta

    y_inv = invert(y)
    z_inv = invert(z)
    steps = 0
    a = alpha
    b = q * alpha
    while a <= beta or b <= beta:
        a = z_inv(a)
        b = y_inv(b)
        steps += 1

    z_bp_xs = [p[0] for p in z.breakpoints[1:-1]]
    # Interior breakpoint values of y, i.e. the breakpoints of y⁻¹.
    y_bp_vals = [p[1] for p in y.breakpoints[1:-1]]

    acc = _Accumulator()
    acc.append(ZERO, ZERO)
    acc.append(alpha, q * alpha)
    t_lo, g_lo = alpha, q * alpha
    # z maps each band onto the one before it, so the argument and value
    # windows (u_lo, t_lo] and (v_lo, g_lo] of the finished prefix are
    # exactly the previous band.
    u_lo, v_lo = z(alpha), q * z(alpha)
    for _ in range(steps):
        t_hi = z_inv(t_lo)
        cands = set()
        for i in range(bisect_right(z_bp_xs, t_lo), len(z_bp_xs)):
            if z_bp_xs[i] >= t_hi:
                break
            cands.add(z_bp_xs[i])
        lo = bisect_right(acc.xs, u_lo)
        hi = bisect_left(acc.xs, t_lo, lo)
        for i in range(lo, hi):
            cands.add(z_inv(acc.xs[i]))
        for i in range(bisect_right(y_bp_vals, v_lo), len(y_bp_vals)):
            w = y_bp_vals[i]
            if w >= g_lo:
                break
            cands.add(z_inv(acc.argument_at(w)))
        for t in sorted(cands):
            acc.append(t, y_inv(acc.value_at(z(t))))
        g_hi = y_inv(g_lo)
        acc.append(t_hi, g_hi)
        u_lo, v_lo = t_lo, g_lo
        t_lo, g_lo = t_hi, g_hi
    acc.append(ONE, ONE)
    g = PLMap(zip(acc.xs, acc.ys))
    assert g.initial_slope == q
    return g


def identification_step(y: PLMap, z: PLMap, alpha) -> PLMap:
    """Extend the identity past an interval where y and z agree.

    When y = z on [0, alpha], the returned g is the identity on
    [0, alpha], equals y⁻¹∘z on [alpha, z⁻¹(alpha)], and runs straight
    to (1, 1) from there; it conjugates y to z pointwise up to
    z⁻¹(alpha).  Iterating this is the identification trick; the stair
    algorithm computes the limit in closed form instead.
    """
    alpha = rat(alpha)
    if not ZERO < alpha < ONE:
        raise DomainError("alpha must lie strictly inside (0, 1)")
    _require_kind(y, BumpKind.BELOW, "first map")
    _require_kind(z, BumpKind.BELOW, "second map")
    grid = sorted(
        {x for x, _ in y.breakpoints if x <= alpha}
        | {x for x, _ in z.breakpoints if x <= alpha}
        | {alpha}
    )
    for t in grid:
        if y(t) != z(t):
            raise PrefixMismatch(f"maps differ at t = {t}, inside [0, {alpha}]")
    z_inv = invert(z)
    y_inv = invert(y)
    top = z_inv(alpha)
    cands = {x for x, _ in z.breakpoints if alpha < x < top}
    cands |= {z_inv(w) for _, w in y.breakpoints if z(alpha) < w < alpha}
    acc = _Accumulator()
    acc.append(ZERO, ZERO)
    acc.append(alpha, alpha)
    for t in sorted(cands):
        acc.append(t, y_inv(z(t)))
    acc.append(top, y_inv(alpha))
    acc.append(ONE, ONE)
    return PLMap(zip(acc.xs, acc.ys))


def verify_conjugator(g: PLMap, y: PLMap, z: PLMap) -> bool:
    """Exact check that g⁻¹∘y∘g = z."""
    return compose(invert(g), compose(y, g)) == z


def conjugates_powers(g: PLMap, y: PLMap, z: PLMap, n: int) -> bool:
    """Exact check that g conjugates yⁿ to zⁿ.

    For one-bump maps this is equivalent to conjugating y to z itself;
    the operation exists so that equivalence is observable.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    ky = classify(y).kind
    kz = classify(z).kind
    if ky is BumpKind.CROSSING or ky is BumpKind.IDENTITY:
        raise NotOneBump(f"first map must be one-bump, got {ky.value}")
    if kz is BumpKind.CROSSING or kz is BumpKind.IDENTITY:
        raise NotOneBump(f"second map must be one-bump, got {kz.value}")
    if ky is not kz:
        raise ClassMismatch(f"maps lie on opposite sides: {ky.value} vs {kz.value}")
    return verify_conjugator(g, power(y, n), power(z, n))


def conjugator_with_slope(y: PLMap, z: PLMap, q) -> PLMap | None:
    """The unique conjugator of y to z with initial slope q, if it exists.

    Above-diagonal pairs are inverted first: a map conjugates y to z
    exactly when it conjugates y⁻¹ to z⁻¹, and the inverses are
    below-diagonal where the stair construction applies.  The candidate
    is verified exactly; None means no conjugator with this slope.
    """
    q = rat(q)
    if q <= 0:
        raise InvalidSlope(f"conjugator slope must be positive, got {q}")
    ky = classify(y).kind
    kz = classify(z).kind
    if ky is BumpKind.CROSSING or ky is BumpKind.IDENTITY:
        raise NotOneBump(f"first map must be one-bump, got {ky.value}")
    if kz is BumpKind.CROSSING or kz is BumpKind.IDENTITY:
        raise NotOneBump(f"second map must be one-bump, got {kz.value}")
    if ky is not kz:
        raise ClassMismatch(f"maps lie on opposite sides: {ky.value} vs {kz.value}")
    if ky is BumpKind.ABOVE:
        y, z = invert(y), invert(z)
    g = stair_candidate(y, z, q)
    return g if verify_conjugator(g, y, z) else None
