"""Shared test utilities: seeded generators and the independent oracle.

The oracle here decides conjugacy without touching the invariant or
stair modules' internals: candidate slopes are read off breakpoint
ratios of explicitly computed powers, and each candidate is tried with
a direct closed-form stair built from compose/power/invert only.  It is
deliberately slower and dumber than the library — that is its value.
"""

from __future__ import annotations

from plconj import (
    BumpKind,
    PLMap,
    classify,
    compose,
    invert,
    power,
    rat,
)

# The three worked maps used throughout the tests.
F = PLMap([(0, 0), (rat(1, 2), rat(3, 4)), (1, 1)])
G = invert(F)
H = PLMap([(0, 0), (rat(1, 2), rat(1, 4)), (1, 1)])


def conjugate_by(h: PLMap, f: PLMap) -> PLMap:
    """h⁻¹∘f∘h."""
    return compose(invert(h), compose(f, h))


def rand_rat(rng, lo, hi, max_den=64):
    """A random rational strictly inside (lo, hi)."""
    lo, hi = rat(lo), rat(hi)
    den_cap = max_den
    while True:
        den = rng.randint(2, den_cap)
        lo_scaled = lo * den
        hi_scaled = hi * den
        lo_n = int(lo_scaled) + 1
        hi_n = int(hi_scaled)
        if hi_n == hi_scaled:
            hi_n -= 1
        if lo_n <= hi_n:
            return rat(rng.randint(lo_n, hi_n), den)
        den_cap *= 4


def random_homeo(rng, max_interior=2, max_den=64) -> PLMap:
    """Any increasing PL homeomorphism of [0,1]; no diagonal constraint."""
    k = rng.randint(0, max_interior)
    xs = sorted({rand_rat(rng, 0, 1, max_den) for _ in range(k)})
    ys = sorted({rand_rat(rng, 0, 1, max_den) for _ in range(len(xs))})
    while len(ys) < len(xs):
        ys.append(rand_rat(rng, ys[-1], 1, max_den))
    return PLMap([(0, 0), *zip(xs, ys), (1, 1)])


def random_above(rng, max_interior=4, max_den=64) -> PLMap:
    """Above-diagonal one-bump map with endpoint slopes bounded away
    from 1, so stair and germ step counts stay small."""
    while True:
        k = rng.randint(1, max_interior)
        xs = sorted({rand_rat(rng, 0, 1, max_den) for _ in range(k)})
        ys_raw = [rand_rat(rng, x, 1, max_den) for x in xs]
        ys = sorted(set(ys_raw))
        if len(ys) != len(xs):
            continue
        # Sorted re-pairing keeps every y above its x: if the i-th order
        # statistic were <= xs[i], then i+1 of the raw values would sit
        # at or below xs[i], forcing two of them into the first i slots.
        f = PLMap([(0, 0), *zip(xs, ys), (1, 1)])
        if classify(f).kind is not BumpKind.ABOVE:
            continue
        if f.initial_slope >= rat(5, 4) and f.final_slope <= rat(4, 5):
            return f


def random_below(rng, max_interior=4, max_den=64) -> PLMap:
    return invert(random_above(rng, max_interior, max_den))


def random_one_bump(rng, max_interior=4, max_den=64) -> PLMap:
    f = random_above(rng, max_interior, max_den)
    return f if rng.random() < 0.5 else invert(f)


def capped_stair_steps(y: PLMap, z: PLMap, q, cap: int) -> int | None:
    """The stair step count, or None if it would exceed cap."""
    alpha = min(y.breakpoints[1][0], z.breakpoints[1][0])
    beta = max(y.breakpoints[-2][0], z.breakpoints[-2][0])
    y_inv, z_inv = invert(y), invert(z)
    a, b, n = alpha, rat(q) * alpha, 0
    while a <= beta or b <= beta:
        a, b, n = z_inv(a), y_inv(b), n + 1
        if n > cap:
            return None
    return n


def capped_germ_steps(z: PLMap, cap: int) -> int | None:
    """Iterations the germ construction would need, or None beyond cap."""
    anchor = z.breakpoints[1][0] / z.initial_slope
    final_lo = z.breakpoints[-2][0]
    t, n = anchor, 0
    while t < final_lo:
        t, n = z(t), n + 1
        if n > cap:
            return None
    return n


def conjugate_pair_below(rng, *, max_steps=50, conj_interior=2, max_den=64):
    """(y, h, z = h⁻¹yh) with y below-diagonal, h'(0) < 1, bounded stair."""
    while True:
        y = random_below(rng, max_den=max_den)
        h = random_homeo(rng, conj_interior, max_den)
        if h.initial_slope >= 1:
            continue
        z = conjugate_by(h, y)
        if capped_stair_steps(y, z, h.initial_slope, max_steps) is None:
            continue
        return y, h, z


def conjugate_pair_above(rng, *, max_steps=50, conj_interior=2, max_den=64):
    """(y, h, z = h⁻¹yh) with y above-diagonal and bounded germ steps."""
    while True:
        y = random_above(rng, max_den=max_den)
        if capped_germ_steps(y, max_steps) is None:
            continue
        h = random_homeo(rng, conj_interior, max_den)
        z = conjugate_by(h, y)
        if capped_germ_steps(z, max_steps) is None:
            continue
        return y, h, z


def matched_slopes_below(rng, c0, c1, max_interior=2, max_den=64) -> PLMap:
    """A below-diagonal map with the given endpoint slopes (c0<1<c1)."""
    while True:
        x1 = rand_rat(rng, rat(1, 20), rat(1, 2), max_den)
        x2 = rand_rat(rng, x1, rat(19, 20), max_den)
        y1 = c0 * x1
        y2 = 1 - c1 * (1 - x2)
        if not y1 < y2:
            continue
        pts = [(rat(0), rat(0)), (x1, y1)]
        for _ in range(rng.randint(0, max_interior - 2)):
            xm = rand_rat(rng, pts[-1][0], x2, max_den)
            ym = rand_rat(rng, pts[-1][1], min(y2, xm), max_den)
            if xm < x2 and ym < y2 and ym < xm:
                pts.append((xm, ym))
        pts += [(x2, y2), (rat(1), rat(1))]
        try:
            f = PLMap(pts)
        except Exception:
            continue
        if classify(f).kind is BumpKind.BELOW and f.initial_slope == c0 and f.final_slope == c1:
            return f


# ---------------------------------------------------------------------------
# Independent oracle


def direct_stair(y: PLMap, z: PLMap, q, seed: PLMap | None = None) -> PLMap:
    """Closed-form stair candidate y⁻ᴺ∘g₀∘zᴺ via explicit powers.

    Independent of the library's band construction: the whole composite
    is built with compose/power and then cut at z⁻ᴺ(alpha).
    """
    q = rat(q)
    assert 0 < q <= 1
    alpha = min(y.breakpoints[1][0], z.breakpoints[1][0])
    beta = max(y.breakpoints[-2][0], z.breakpoints[-2][0])
    y_inv, z_inv = invert(y), invert(z)
    a, b, n = alpha, q * alpha, 0
    while a <= beta or b <= beta:
        a, b, n = z_inv(a), y_inv(b), n + 1
    g0 = seed if seed is not None else PLMap([(0, 0), (alpha, q * alpha), (1, 1)])
    assert g0(alpha) == q * alpha
    full = compose(power(y, -n), compose(g0, power(z, n)))
    pts = [p for p in full.breakpoints if p[0] < a]
    pts.append((a, full(a)))
    pts.append((rat(1), rat(1)))
    return PLMap(pts)


def zero_end_classes(w: PLMap) -> list:
    """Kink classes of deep inverse powers of a below-diagonal map near 0.

    Kinks of w⁻ᴹ are forward w-orbits of w's own kink data and march
    toward 0 geometrically (ratio w'(0)) once inside the initial linear
    region; one multiplicative period window then holds exactly one
    point per surviving orbit.  Classes that cancel along colliding
    orbits genuinely vanish from every power, so reading the computed
    map's breakpoints is the honest enumeration.
    """
    c = w.initial_slope
    alpha = w.breakpoints[1][0]
    theta = c * c * alpha
    kinks = [x for x, _ in w.breakpoints[1:-1]]
    m = 2
    for b in kinks:
        x, k = b, 0
        while x > theta:
            x, k = w(x), k + 1
        m = max(m, k + 1)
    deep = power(w, -m)
    return [x for x, _ in deep.breakpoints[1:-1] if theta * c < x <= theta]


def _reduce_slope(x, c):
    """Scale x by powers of c (< 1) into the window (c, 1]."""
    while x <= c:
        x /= c
    while x > 1:
        x *= c
    return x


def oracle_candidate_slopes(y: PLMap, z: PLMap) -> list:
    sy = zero_end_classes(y)
    sz = zero_end_classes(z)
    assert sy and sz, "degenerate corpus pair: all kink orbits cancelled"
    c = y.initial_slope
    return sorted({_reduce_slope(a / b, c) for a in sy for b in sz})


def oracle_conjugator(y: PLMap, z: PLMap) -> PLMap | None:
    """Exhaustive candidate-slope stair search; None if nothing verifies.

    For below-diagonal pairs the conjugator's initial slope, reduced by
    powers of the common initial slope, must be a ratio of surviving
    kink classes near 0 (conjugating by g maps the kink set of z⁻ᴹ near
    0 to that of y⁻ᴹ by 1/g'(0), because g is linear there and both
    sets are kinks of one and the same composite function).
    """
    ky = classify(y).kind
    kz = classify(z).kind
    if ky is not kz or ky not in (BumpKind.ABOVE, BumpKind.BELOW):
        return None
    if ky is BumpKind.ABOVE:
        y, z = invert(y), invert(z)
    if y.initial_slope != z.initial_slope or y.final_slope != z.final_slope:
        return None
    for q in oracle_candidate_slopes(y, z):
        g = direct_stair(y, z, q)
        if compose(invert(g), compose(y, g)) == z:
            return g
    return None
