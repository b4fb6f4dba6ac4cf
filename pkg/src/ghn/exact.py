"""Exact rational scalars and binomial/factorial primitives.

Every scalar in this package is an exact ``fractions.Fraction`` (aliased as
``Rat``); nothing here ever touches floating point.  Fractions are always
stored reduced with a positive denominator, parse from strings like ``"p/q"``
and print the same way, so they double as the wire format.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

RatLike = Fraction | int


def binom_int(n: int, k: int) -> int:
    """C(n, k) for integer n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binom_int requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_rat(x: RatLike, k: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-k+1)/k!; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


def rising_factorial(x: RatLike, n: int) -> Fraction:
    """x(x+1)...(x+n-1); the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("rising_factorial requires n >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def hockey_stick_sum(x: RatLike, n: int) -> Fraction:
    """sum_{m=0..n} C(x+m, m), which telescopes to C(x+n+1, n)."""
    if n < 0:
        raise ValueError("hockey_stick_sum requires n >= 0")
    x = Fraction(x)
    total = Fraction(0)
    term = Fraction(1)
    for m in range(n + 1):
        if m > 0:
            term = term * (x + m) / m
        total += term
    return total
