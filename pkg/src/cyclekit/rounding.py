"""Directed high-precision evaluation of the irrational bound expressions.

Everything here evaluates positive monotone expressions (products, quotients
and powers of values >= 1) under MPFR contexts with one-sided rounding, so an
UP result is never below the true value and a DOWN result never above it.
Comparisons of the results against exact ints/Fractions are therefore sound.
Exponents that are exact integers short-circuit to exact arithmetic upstream.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

UP = gmpy2.RoundUp
DOWN = gmpy2.RoundDown

# ~60 decimal digits; the spec floor is 50.
PRECISION_BITS = 200


def directed(rounding, precision: int = PRECISION_BITS):
    """Context manager with one-sided rounding."""
    return gmpy2.context(precision=precision, round=rounding)


def pow_fraction(base: Fraction, exponent: int, rounding) -> mpfr:
    """base**exponent for base >= 1, exponent >= 0, directed."""
    if base < 1 or exponent < 0:
        raise ValueError("directed pow_fraction needs base >= 1, exponent >= 0")
    with directed(rounding):
        b = mpfr(base.numerator) / mpfr(base.denominator)
        return b ** exponent


def three_pow(m: int, rounding) -> int | mpfr:
    """3**(m/3); exact int when 3 | m."""
    if m < 0:
        raise ValueError("negative exponent")
    if m % 3 == 0:
        return 3 ** (m // 3)
    with directed(rounding):
        e = mpfr(m) / 3
        return mpfr(3) ** e


def equal_split_power(s: int, alpha: Fraction, exponent: int, rounding) -> int | mpfr:
    """(s**(1-alpha) * (s+1)**alpha) ** exponent, for s >= 1, 0 <= alpha < 1.

    Computed as (s * ((s+1)/s)**alpha)**exponent, which is monotone increasing
    in every rounded intermediate, so directed rounding is sound.  Exact int
    when alpha == 0.
    """
    if s < 1 or not (0 <= alpha < 1) or exponent < 0:
        raise ValueError(f"bad equal-split power: s={s}, alpha={alpha}")
    if alpha == 0:
        return s ** exponent
    with directed(rounding):
        ratio = mpfr(s + 1) / mpfr(s)
        a = mpfr(alpha.numerator) / mpfr(alpha.denominator)
        return (s * ratio ** a) ** exponent


def silver_pow(n: int, rounding) -> mpfr:
    """(2 + 2*sqrt(2)) ** n, directed."""
    if n < 0:
        raise ValueError("negative exponent")
    with directed(rounding):
        return (2 + 2 * gmpy2.sqrt(mpfr(2))) ** n


def ceil_silver_pow(n: int) -> int:
    """Exact ceil((2 + 2*sqrt(2))**n) via integer arithmetic in Z[sqrt(2)].

    (2+2*sqrt(2))**n = a + b*sqrt(2) with integer a, b; the value is
    irrational for n >= 1, so the ceiling is a + floor(sqrt(2*b*b)) + 1.
    """
    if n < 0:
        raise ValueError("negative exponent")
    a, b = 1, 0
    for _ in range(n):
        a, b = 2 * a + 4 * b, 2 * a + 2 * b
    if b == 0:
        return a
    return a + math.isqrt(2 * b * b) + 1


def certified_le(upper_of_lhs, lower_of_rhs) -> bool:
    """True when lhs <= rhs is certain given directed evaluations."""
    return upper_of_lhs <= lower_of_rhs
