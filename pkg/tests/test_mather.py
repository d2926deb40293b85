from __future__ import annotations

import random

import pytest

from plconj import (
    DomainError,
    InternalConsistencyError,
    MatherGerm,
    NotAboveDiagonal,
    OutOfRange,
    PLMap,
    RotationPair,
    ScaleMismatch,
    germ_breakpoint_classes,
    germ_eval,
    identity,
    invert,
    mather_invariant,
    power,
    rat,
    rotation_equivalent,
    self_rotation_classes,
)
from plconj.rational import multiplicative_exponent
from helpers import (
    F,
    G,
    H,
    conjugate_by,
    conjugate_pair_above,
    rand_rat,
    random_above,
)


def test_germ_of_worked_map():
    germ = mather_invariant(F)
    assert germ.m0 == rat(3, 2)
    assert germ.m1 == rat(1, 2)
    assert germ.anchor == rat(1, 3)
    assert germ.steps == 1
    assert germ.profile == ((rat(1, 3), rat(1, 2)), (rat(1, 2), rat(1, 4)))
    assert germ.period_end == rat(1, 2)


def test_germ_seam_identity():
    rng = random.Random(901)
    for _ in range(30):
        z = random_above(rng)
        germ = mather_invariant(z)
        assert germ.profile[-1][1] == germ.m1 * germ.profile[0][1]
        assert germ.profile[0][0] == germ.anchor
        assert germ.profile[-1][0] == germ.m0 * germ.anchor
        values = [v for _, v in germ.profile]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(0 < v < 1 for v in values)


def test_germ_step_count_independence():
    germ1 = mather_invariant(F)
    germ2 = mather_invariant(F, steps=2)
    germ3 = mather_invariant(F, steps=3)
    assert germ2.profile == tuple((x, rat(1, 2) * v) for x, v in germ1.profile)
    assert germ3.profile == tuple((x, rat(1, 4) * v) for x, v in germ1.profile)
    rng = random.Random(902)
    for _ in range(10):
        z = random_above(rng)
        g1 = mather_invariant(z)
        g2 = mather_invariant(z, steps=g1.steps + 1)
        assert g2.profile == tuple((x, g1.m1 * v) for x, v in g1.profile)


def test_germ_rejects_insufficient_steps():
    with pytest.raises(DomainError):
        mather_invariant(F, steps=0)


def test_germ_anchor_validation():
    germ = mather_invariant(F, anchor=rat(2, 9))
    assert germ.anchor == rat(2, 9)
    assert germ.steps == 2
    with pytest.raises(DomainError):
        mather_invariant(F, anchor=rat(1, 2))
    with pytest.raises(DomainError):
        mather_invariant(F, anchor=rat(0))


def test_germ_anchor_independence_is_trivial_rotation():
    germ = mather_invariant(F)
    shifted = mather_invariant(F, anchor=germ.anchor / germ.m0)
    assert rotation_equivalent(shifted, germ) == RotationPair(rat(1), rat(1))
    assert rotation_equivalent(germ, shifted) == RotationPair(rat(1), rat(1))
    rng = random.Random(903)
    for _ in range(8):
        z = random_above(rng)
        g1 = mather_invariant(z)
        g2 = mather_invariant(z, anchor=g1.anchor / g1.m0)
        assert rotation_equivalent(g1, g2) == RotationPair(rat(1), rat(1))


def test_germ_requires_above_diagonal():
    with pytest.raises(NotAboveDiagonal):
        mather_invariant(G)
    with pytest.raises(NotAboveDiagonal):
        mather_invariant(identity())


def test_germ_consistency_guard():
    with pytest.raises(InternalConsistencyError):
        MatherGerm(
            m0=rat(3, 2),
            m1=rat(1, 2),
            anchor=rat(1, 3),
            profile=((rat(1, 3), rat(1, 2)), (rat(1, 2), rat(1, 3))),
            steps=1,
        )


def test_germ_eval_worked_values():
    germ = mather_invariant(F)
    assert germ_eval(germ, rat(2, 9)) == rat(1)
    assert germ_eval(germ, rat(1, 2)) == rat(1, 4)
    assert germ_eval(germ, rat(1, 3)) == rat(1, 2)
    # one period up: value scales by m1
    assert germ_eval(germ, rat(3, 4)) == germ_eval(germ, rat(1, 2)) * rat(1, 2)


def test_germ_eval_equivariance():
    rng = random.Random(904)
    for _ in range(10):
        z = random_above(rng)
        germ = mather_invariant(z)
        for _ in range(10):
            t = rand_rat(rng, germ.anchor / germ.m0 ** 2, germ.period_end)
            assert germ_eval(germ, germ.m0 * t) == germ.m1 * germ_eval(germ, t)


def test_germ_eval_domain():
    germ = mather_invariant(F)
    with pytest.raises(DomainError):
        germ_eval(germ, rat(0))
    with pytest.raises(DomainError):
        germ_eval(germ, rat(-1, 3))
    with pytest.raises(OutOfRange):
        germ_eval(germ, rat(1, 3) * rat(2, 3) ** 10, max_periods=4)


def test_germ_breakpoint_classes_worked_values():
    germ = mather_invariant(F)
    assert germ_breakpoint_classes(germ) == (rat(1, 3),)


def test_germ_breakpoint_classes_never_empty():
    rng = random.Random(905)
    for _ in range(30):
        z = random_above(rng)
        germ = mather_invariant(z)
        classes = germ_breakpoint_classes(germ)
        assert classes
        assert all(germ.anchor <= c < germ.period_end for c in classes)


def test_rotation_equivalent_worked_values():
    gF = mather_invariant(F)
    gZ = mather_invariant(conjugate_by(H, F))
    assert rotation_equivalent(gF, gZ) == RotationPair(rat(9, 8), rat(3, 4))
    assert rotation_equivalent(gF, gF) == RotationPair(rat(1), rat(1))


def test_rotation_equivalent_scale_mismatch():
    other = PLMap([(0, 0), (rat(1, 3), rat(2, 3)), (1, 1)])
    with pytest.raises(ScaleMismatch):
        rotation_equivalent(mather_invariant(F), mather_invariant(other))


def test_rotation_covariance_under_conjugation():
    rng = random.Random(906)
    for _ in range(12):
        y, h, z = conjugate_pair_above(rng)
        gy, gz = mather_invariant(y), mather_invariant(z)
        rot = rotation_equivalent(gy, gz)
        assert rot is not None
        assert multiplicative_exponent(rot.rot0 / h.initial_slope, gy.m0) is not None
        assert multiplicative_exponent(rot.rot1 / h.final_slope, gy.m1) is not None


def test_rotation_symmetry():
    rng = random.Random(907)
    for _ in range(10):
        y, _, z = conjugate_pair_above(rng)
        gy, gz = mather_invariant(y), mather_invariant(z)
        fwd = rotation_equivalent(gy, gz)
        back = rotation_equivalent(gz, gy)
        assert fwd is not None and back is not None
        assert multiplicative_exponent(fwd.rot0 * back.rot0, gy.m0) is not None
        assert multiplicative_exponent(fwd.rot1 * back.rot1, gy.m1) is not None


def _reduce(x, lo, hi, m):
    while x < lo:
        x *= m
    while x >= hi:
        x /= m
    return x


def _brute_force_rotation(gy, gz, samples):
    """All-pairs candidate sweep checked pointwise through germ_eval."""
    if (gy.m0, gy.m1) != (gz.m0, gz.m1):
        return None
    cands = set()
    for by in germ_breakpoint_classes(gy):
        for bz in germ_breakpoint_classes(gz):
            cands.add(_reduce(by / bz, rat(1), gy.m0, gy.m0))
    for k in sorted(cands):
        factor = germ_eval(gy, k * gz.anchor) / germ_eval(gz, gz.anchor)
        if all(
            germ_eval(gy, k * t) == factor * germ_eval(gz, t)
            for t in samples(gz)
        ):
            return k
    return None


def test_rotation_candidate_enumeration_is_complete():
    # The library fixes one denominator class; sweeping every class pair
    # (and verifying pointwise, independently of the library's grid)
    # must reach the same decision.
    rng = random.Random(908)

    def samples(gz):
        pts = [gz.anchor] + list(germ_breakpoint_classes(gz))
        pts += [rand_rat(rng, gz.anchor, gz.period_end) for _ in range(12)]
        return pts

    pairs = []
    for _ in range(6):
        y, _, z = conjugate_pair_above(rng)
        pairs.append((y, z))
    for _ in range(6):
        pairs.append((random_above(rng), random_above(rng)))
    for y, z in pairs:
        gy, gz = mather_invariant(y), mather_invariant(z)
        if (gy.m0, gy.m1) != (gz.m0, gz.m1):
            continue
        brute = _brute_force_rotation(gy, gz, samples)
        lib = rotation_equivalent(gy, gz)
        assert (brute is None) == (lib is None)
        if lib is not None:
            factor = germ_eval(gy, lib.rot0 * gz.anchor) / germ_eval(gz, gz.anchor)
            for t in samples(gz):
                assert germ_eval(gy, lib.rot0 * t) == factor * germ_eval(gz, t)
            assert multiplicative_exponent(factor / lib.rot1, gy.m1) is not None


def test_self_rotation_classes():
    gF = mather_invariant(F)
    assert self_rotation_classes(gF) == (rat(1),)
    gFF = mather_invariant(power(F, 2))
    assert rat(3, 2) in self_rotation_classes(gFF)
    assert self_rotation_classes(gFF)[0] == rat(1)


def test_below_diagonal_pairs_go_through_inverses():
    # Mather data of a below-diagonal pair is read off the inverses.
    z = conjugate_by(H, G)
    gy = mather_invariant(invert(G))
    gz = mather_invariant(invert(z))
    assert rotation_equivalent(gy, gz) is not None
