"""Exact rational scalars.

Every coordinate, slope and rotation parameter in this package is an
arbitrary-precision rational; nothing is ever rounded.  The reference
backend is :class:`fractions.Fraction`.  When gmpy2 is importable its
``mpq`` type is used instead: the semantics are identical (canonical
reduced form, exact comparisons) and large operands are much faster.
Set the environment variable ``PLCONJ_RATIONAL=fractions`` to force the
pure-Python backend.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

if os.environ.get("PLCONJ_RATIONAL", "") == "fractions":
    Rat = Fraction
    _iroot = None
else:
    try:
        from gmpy2 import iroot as _iroot
        from gmpy2 import mpq as Rat
    except ImportError:  # pragma: no cover - exercised via the env override
        Rat = Fraction
        _iroot = None

ZERO = Rat(0)
ONE = Rat(1)

_RAT_TOKEN = re.compile(r"[+-]?\d+(/\d+)?\Z")


def rat(value, den=None) -> Rat:
    """Coerce ``value`` to an exact rational.

    Accepts the backend type, ints, and strings of the form ``p`` or
    ``p/q``.  Floats are rejected: their value is almost never the number
    the caller wrote down.
    """
    if den is not None:
        return Rat(value) / Rat(den)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or a rational")
    if isinstance(value, str):
        return parse_rat(value)
    return Rat(value)


def parse_rat(token: str) -> Rat:
    """Parse ``p`` or ``p/q`` exactly; reject anything else."""
    token = token.strip()
    if not _RAT_TOKEN.match(token):
        if "." in token:
            raise ValueError(
                f"decimal literal {token!r} is not accepted; write an exact fraction p/q"
            )
        raise ValueError(f"not a rational literal: {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return Rat(int(num)) / Rat(int(den))
    return Rat(int(token))


def format_rat(r) -> str:
    """Canonical text form: ``p/q``, or just ``p`` for integers."""
    n, d = r.numerator, r.denominator
    return f"{n}" if d == 1 else f"{n}/{d}"


def integer_nth_root(value: int, n: int) -> tuple[int, bool]:
    """Floor n-th root of a non-negative integer, and whether it is exact."""
    if value < 0 or n < 1:
        raise ValueError("integer_nth_root needs value >= 0 and n >= 1")
    if _iroot is not None:
        root, exact = _iroot(value, n)
        return int(root), bool(exact)
    if value == 0:
        return 0, True
    # Newton iteration on integers.
    x = 1 << ((value.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + value // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x, x**n == value


def rational_nth_root(r, n: int):
    """The exact rational n-th root of ``r``, or None if there is none."""
    if r <= 0:
        return None
    pn, exact_n = integer_nth_root(int(r.numerator), n)
    if not exact_n:
        return None
    pd, exact_d = integer_nth_root(int(r.denominator), n)
    if not exact_d:
        return None
    return Rat(pn) / Rat(pd)


def multiplicative_exponent(q, base):
    """The integer j with base**j == q, or None.  Needs base != 1, both > 0."""
    if base == 1 or base <= 0 or q <= 0:
        raise ValueError("multiplicative_exponent needs base != 1 and positive arguments")
    if q == 1:
        return 0
    # Walk powers of base toward q; monotone, so the walk terminates.
    up = base if base > 1 else 1 / base
    target = q if q > 1 else 1 / q
    sign = 1 if (q > 1) == (base > 1) else -1
    p, j = up, 1
    while p < target:
        p *= up
        j += 1
    return sign * j if p == target else None
