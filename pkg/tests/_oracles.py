"""Independent oracles the tests check library answers against.

Nothing here calls the expansion or comparison code under test: periodic
words become surds by solving the period's fixed-point quadratic, and order
against a rational is decided with integer square-root bounds at growing
precision.
"""

from fractions import Fraction
from math import isqrt

from bairecf import QuadraticSurd


def mobius_surd(a, b, c, d, s: QuadraticSurd) -> QuadraticSurd:
    """(a*s + b) / (c*s + d), rationalized by the conjugate."""
    n1, nq = a * s.p + b * s.r, a * s.q
    d1, dq = c * s.p + d * s.r, c * s.q
    den = d1 * d1 - dq * dq * s.d
    return QuadraticSurd(n1 * d1 - nq * dq * s.d, nq * d1 - n1 * dq, s.d, den)


def periodic_surd(head: tuple, block: tuple) -> QuadraticSurd:
    """Exact value of the word head followed by block repeated forever.

    The pure-period value y is the positive root of c*y^2 + (d-a)*y - b = 0
    where [[a,b],[c,d]] is the product of the digit matrices [[digit,1],[1,0]];
    head digits are then folded on via x -> digit + 1/x.
    """
    a, b, c, d = 1, 0, 0, 1
    for digit in block:
        a, b, c, d = a * digit + b, a, c * digit + d, c
    disc = (d - a) ** 2 + 4 * b * c
    y = QuadraticSurd(a - d, 1, disc, 2 * c)
    for digit in reversed(head):
        y = mobius_surd(digit, 1, 1, 0, y)
    return y


def compare_oracle(s: QuadraticSurd, x) -> str:
    """"GT" or "LT" for s versus the rational x, by interval refinement."""
    x = Fraction(x)
    digits = 30
    while True:
        scale = 10 ** digits
        lo = isqrt(s.d * scale * scale)  # lo <= sqrt(d)*scale < lo + 1
        if s.q >= 0:
            num_lo, num_hi = s.q * lo, s.q * (lo + 1)
        else:
            num_lo, num_hi = s.q * (lo + 1), s.q * lo
        lhs_lo = (s.p * scale + num_lo) * x.denominator
        lhs_hi = (s.p * scale + num_hi) * x.denominator
        rhs = x.numerator * s.r * scale
        if lhs_lo > rhs:
            return "GT"
        if lhs_hi < rhs:
            return "LT"
        digits *= 2


NON_SQUARES = tuple(n for n in range(2, 80) if isqrt(n) ** 2 != n)

NAMED_SURDS = {
    "sqrt2": QuadraticSurd(0, 1, 2),
    "sqrt3": QuadraticSurd(0, 1, 3),
    "sqrt5": QuadraticSurd(0, 1, 5),
    "sqrt7": QuadraticSurd(0, 1, 7),
    "golden": QuadraticSurd(1, 1, 5, 2),
    "minus_sqrt2": QuadraticSurd(0, -1, 2),
}
