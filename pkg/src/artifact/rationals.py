"""Shared exact-rational helpers.

Everything in this package computes in exact rational arithmetic; floats
appear only when a figure is rasterized.  Rationals are plain
fractions.Fraction values and serialize as "p/q", or "p" when the
denominator is 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

Q = Fraction  # rational type alias


def parse_rational(value: str | int) -> Fraction:
    """Parse "p/q" or "p" (a bare int is accepted as-is) into a Fraction."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_point(point: tuple[Fraction, ...]) -> list[str]:
    return [format_rational(c) for c in point]


def frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def sign(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def floor_log(base: int, x: Fraction) -> int:
    """Largest integer m (any sign) with base**m <= x.  Requires x > 0."""
    if x <= 0:
        raise ValueError("floor_log needs a positive argument")
    m = 0
    value = Fraction(1)
    if x >= 1:
        while value * base <= x:
            value *= base
            m += 1
    else:
        while value > x:
            value /= base
            m -= 1
    return m


def circular_gap(a: Fraction, b: Fraction, circumference: Fraction) -> Fraction:
    """Distance between a and b on a circle of the given circumference."""
    g = (a - b) % circumference
    return min(g, circumference - g)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of x >= 0, or None when it is irrational."""
    if x < 0:
        raise ValueError("rational_sqrt needs a nonnegative argument")
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None
