"""Continued-fraction words: expansion, evaluation, convergents.

A finite word (a0, a1, ..., an) denotes a0 + 1/(a1 + 1/(... + 1/an)), with a0
any integer and every later digit a positive integer.  Canonical words (the
``CFWord`` type) additionally end in a digit >= 2 whenever they are longer
than one digit, which makes rational -> word one-to-one.  Evaluation and tail
substitution accept arbitrary valid digit sequences, canonical or not.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rational import euclid_div
from .surd import QuadraticSurd


def _as_digits(w, what: str = "digit sequence") -> tuple[int, ...]:
    if isinstance(w, CFWord):
        return w.digits
    digits = tuple(w)
    if not digits:
        raise ValueError(f"{what} must have at least one digit")
    for i, a in enumerate(digits):
        if not isinstance(a, int):
            raise ValueError(f"{what}: digit {i} is not an integer: {a!r}")
        if i >= 1 and a < 1:
            raise ValueError(f"{what}: digit {i} must be >= 1, got {a}")
    return digits


@dataclass(frozen=True)
class CFWord:
    """Canonical finite continued-fraction word."""

    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        digits = _as_digits(self.digits, "CF word")
        if len(digits) > 1 and digits[-1] < 2:
            raise ValueError("canonical CF word must not end in 1")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __str__(self) -> str:
        return format_cf(self.digits)


def expand_rational(x: Fraction) -> CFWord:
    """Canonical word of a rational, by iterated floor division."""
    a, b = x.numerator, x.denominator
    digits = []
    # Remainders at least halve every two steps, so this bound never fires.
    limit = 2 * b.bit_length() + 2
    while True:
        q, r = euclid_div(a, b)
        digits.append(q)
        if r == 0:
            break
        if len(digits) > limit:
            raise RuntimeError(f"internal error: expansion of {x} exceeded {limit} steps")
        a, b = b, r
    return CFWord(tuple(digits))


def evaluate(w: "CFWord | Sequence[int]") -> Fraction:
    """Exact value, folded back to front."""
    digits = _as_digits(w)
    acc = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        acc = a + 1 / acc
    return acc


def evaluate_with_tail(prefix: Sequence[int], x: Fraction) -> Fraction:
    """Value of (prefix..., x): the word with a rational x > 0 in the last slot."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"tail value must be positive, got {x}")
    if isinstance(prefix, CFWord):
        digits = prefix.digits
    else:
        digits = tuple(prefix)
        if digits:
            _as_digits(digits, "prefix")
    acc = x
    for a in reversed(digits):
        acc = a + 1 / acc
    return acc


def convergents(w: "CFWord | Sequence[int]") -> list[Fraction]:
    """Values of all prefixes, via the standard numerator/denominator recurrence."""
    digits = _as_digits(w)
    out = []
    p0, q0 = 1, 0
    p1, q1 = digits[0], 1
    out.append(Fraction(p1, q1))
    for a in digits[1:]:
        p1, p0 = a * p1 + p0, p1
        q1, q0 = a * q1 + q0, q1
        out.append(Fraction(p1, q1))
    return out


def expand_surd(s: QuadraticSurd, depth: int) -> tuple[int, ...]:
    """First depth+1 digits of the (infinite) word of an irrational.

    Digits come from floor/reciprocal iteration; every returned prefix pins the
    value strictly between the prefix's value and the value with its last digit
    bumped by one.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    digits = []
    cur = s
    for i in range(depth + 1):
        digits.append(cur.floor())
        if i < depth:
            cur = cur.recip_frac()
    return tuple(digits)


_CF_RE = re.compile(r"\s*\[\s*(-?\d+)\s*(?:;\s*(\d+(?:\s*,\s*\d+)*)\s*)?\]\s*$")


def parse_cf(text: str) -> tuple[int, ...]:
    m = _CF_RE.match(text)
    if m is None:
        raise ValueError(f"not a continued-fraction word: {text!r}")
    digits = [int(m.group(1))]
    if m.group(2):
        digits.extend(int(tok) for tok in m.group(2).split(","))
    return _as_digits(digits)


def format_cf(w: "CFWord | Sequence[int]") -> str:
    digits = w.digits if isinstance(w, CFWord) else tuple(w)
    if len(digits) == 1:
        return f"[{digits[0]}]"
    return f"[{digits[0]}; " + ", ".join(str(a) for a in digits[1:]) + "]"
