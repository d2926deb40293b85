"""Conjugacy decisions, centralizers and roots for one-bump maps.

Everything here reduces to two engines: the Mather invariant decides
*whether* two maps are conjugate and pins down the admissible initial
slopes, and the stair construction then produces the conjugator, which
is verified exactly before anything is returned.  A positive answer is
always a certificate the caller can re-check; a negative answer names
the invariant that failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalConsistencyError, NotOneBump
from .mather import (
    MatherGerm,
    RotationPair,
    germ_breakpoint_classes,
    mather_invariant,
    rotation_equivalent,
    self_rotation_classes,
)
from .plmap import BumpKind, PLMap, classify, invert, power
from .rational import Rat, multiplicative_exponent, rational_nth_root
from .stair import conjugator_with_slope, verify_conjugator

__all__ = [
    "CentralizerDescription",
    "Conjugate",
    "ConjugacyOutcome",
    "NonConjugacyReason",
    "NotConjugate",
    "are_conjugate",
    "centralizer_generator",
    "nth_root",
    "slope_exponent",
]


class NonConjugacyReason(Enum):
    SLOPE_MISMATCH = "slope-mismatch"
    CLASS_MISMATCH = "class-mismatch"
    INVARIANT_MISMATCH = "invariant-mismatch"


@dataclass(frozen=True)
class Conjugate:
    """Positive outcome: conjugator verifies g⁻¹∘y∘g = z exactly, and
    rotation is the germ-aligning pair that produced its slope."""

    conjugator: PLMap
    rotation: RotationPair

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotConjugate:
    """Negative outcome: reason names the invariant separating the maps
    and witness spells out the mismatching values."""

    reason: NonConjugacyReason
    witness: str

    def __bool__(self) -> bool:
        return False


ConjugacyOutcome = Conjugate | NotConjugate


def _one_bump_kind(f: PLMap, what: str) -> BumpKind:
    kind = classify(f).kind
    if kind is BumpKind.ABOVE or kind is BumpKind.BELOW:
        return kind
    raise NotOneBump(f"{what} must be one-bump, got {kind.value}")


def _germ_of(z: PLMap, kind: BumpKind) -> MatherGerm:
    return mather_invariant(z if kind is BumpKind.ABOVE else invert(z))


def are_conjugate(y: PLMap, z: PLMap) -> ConjugacyOutcome:
    """Decide conjugacy of two one-bump maps, with a certificate.

    The decision chain: same side of the diagonal, equal endpoint
    slopes, rotation-equivalent Mather germs (computed on the maps
    themselves if above-diagonal, on their inverses otherwise — the
    inverses share every conjugator).  Each stage that fails produces
    the corresponding negative outcome; when all pass, the rotation's
    domain representative is a valid conjugator slope and the stair
    construction at that slope must succeed.
    """
    ky = _one_bump_kind(y, "first map")
    kz = _one_bump_kind(z, "second map")
    if ky is not kz:
        return NotConjugate(
            NonConjugacyReason.CLASS_MISMATCH,
            f"maps lie on opposite sides of the diagonal: {ky.value} vs {kz.value}",
        )
    if y.initial_slope != z.initial_slope or y.final_slope != z.final_slope:
        return NotConjugate(
            NonConjugacyReason.SLOPE_MISMATCH,
            f"endpoint slopes differ: initial {y.initial_slope} vs {z.initial_slope},"
            f" final {y.final_slope} vs {z.final_slope}",
        )
    gy = _germ_of(y, ky)
    gz = _germ_of(z, kz)
    rot = rotation_equivalent(gy, gz)
    if rot is None:
        ny = len(germ_breakpoint_classes(gy))
        nz = len(germ_breakpoint_classes(gz))
        return NotConjugate(
            NonConjugacyReason.INVARIANT_MISMATCH,
            f"Mather germs are not rotation-equivalent"
            f" (germ breakpoint classes: {ny} vs {nz})",
        )
    g = conjugator_with_slope(y, z, rot.rot0)
    if g is None:
        raise InternalConsistencyError(
            "germs are rotation-equivalent but the stair candidate failed to verify"
        )
    return Conjugate(g, rot)


@dataclass(frozen=True)
class CentralizerDescription:
    """The centralizer of a one-bump map: the infinite cyclic group
    generated by `generator`, whose initial slope is `slope` and whose
    exponent-th power is the map itself."""

    generator: PLMap
    slope: Rat
    exponent: int


def centralizer_generator(z: PLMap) -> CentralizerDescription:
    """Generator of the (infinite cyclic) centralizer of z.

    Working on z itself or its inverse so the germ exists, the valid
    self-rotations of the germ form a finite cyclic group of slope
    classes; the generator is the stair conjugator of z to itself at
    the smallest valid slope above 1.  Its exponent-th power returns z
    exactly — verified, not assumed.
    """
    kind = _one_bump_kind(z, "map")
    za = z if kind is BumpKind.ABOVE else invert(z)
    germ = mather_invariant(za)
    valid = self_rotation_classes(germ)
    k_above = valid[1] if len(valid) > 1 else germ.m0
    exponent = 1
    acc = k_above
    while acc != germ.m0:
        acc *= k_above
        exponent += 1
        if exponent > len(valid):
            raise InternalConsistencyError(
                "self-rotation classes do not form the expected cyclic group"
            )
    gen_above = conjugator_with_slope(za, za, k_above)
    if gen_above is None:
        raise InternalConsistencyError(
            "verified self-rotation slope produced no centralizing map"
        )
    if kind is BumpKind.ABOVE:
        generator, slope = gen_above, k_above
    else:
        generator, slope = invert(gen_above), 1 / k_above
    if power(generator, exponent) != z:
        raise InternalConsistencyError(
            "centralizer generator does not recover the map as its power"
        )
    return CentralizerDescription(generator, slope, exponent)


def slope_exponent(z: PLMap, g: PLMap) -> int | None:
    """Position of g in the centralizer of z, or None.

    If g commutes with z it is a power of the centralizer generator,
    and its index is read off the initial slope; the map-level equality
    is still checked exactly.  Non-centralizing g gives None.
    """
    _one_bump_kind(z, "map")
    if not verify_conjugator(g, z, z):
        return None
    desc = centralizer_generator(z)
    j = multiplicative_exponent(g.initial_slope, desc.slope)
    if j is None or power(desc.generator, j) != g:
        raise InternalConsistencyError(
            "centralizing map is not a power of the centralizer generator"
        )
    return j


def nth_root(z: PLMap, n: int) -> PLMap | None:
    """A map whose n-th power is z exactly, or None if none exists.

    Any root is one-bump and commutes with z, so it must be a power of
    the centralizer generator; a root exists exactly when n divides the
    generator's exponent.  Before computing the centralizer, the
    endpoint slopes give a cheap rejection: a root's slopes are n-th
    roots of z's, and those must be rational.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    _one_bump_kind(z, "map")
    if n == 1:
        return z
    if rational_nth_root(z.initial_slope, n) is None:
        return None
    if rational_nth_root(z.final_slope, n) is None:
        return None
    desc = centralizer_generator(z)
    if desc.exponent % n != 0:
        return None
    root = power(desc.generator, desc.exponent // n)
    if power(root, n) != z:
        raise InternalConsistencyError("constructed root fails to recover the map")
    return root
