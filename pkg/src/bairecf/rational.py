"""Exact rational plumbing.

Rationals are plain ``fractions.Fraction`` values: stored reduced, denominator
positive, arbitrary precision.  The text format is ``p/q`` with ``/q`` omitted
for integers; ``parse_rational``/``format_rational`` round-trip bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def euclid_div(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder with 0 <= r < b, also for negative dividends."""
    if b <= 0:
        raise ValueError(f"divisor must be positive, got {b}")
    # Python's // is floor division for ints, which is exactly this contract.
    return a // b, a % b
