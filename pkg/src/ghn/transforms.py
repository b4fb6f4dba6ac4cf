"""Binomial transform machinery.

Forward and inverse binomial transforms, the double-sum expansion of
C(n,k)*k^p over Stirling numbers (which turns plain transforms into
k^p-weighted ones), and the combined weighted-nabla sum used by the
alternating harmonic-transform decomposition.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import OutOfValidityRangeError
from .exact import RatLike, binom_int
from .sequences import stirling2


def binomial_transform(a: Sequence[RatLike]) -> list:
    """b_n = sum_{k=0..n} C(n, k) a_k for every index of a."""
    a = list(a)
    if not a:
        raise ValueError("empty sequence")
    return [sum(binom_int(n, k) * a[k] for k in range(n + 1)) for n in range(len(a))]


def inverse_binomial_transform(b: Sequence[RatLike]) -> list:
    """a_n = sum_{k=0..n} C(n, k) (-1)^(n-k) b_k; inverts binomial_transform."""
    b = list(b)
    if not b:
        raise ValueError("empty sequence")
    return [
        sum(binom_int(n, k) * (-1) ** (n - k) * b[k] for k in range(n + 1))
        for n in range(len(b))
    ]


def sanchez_weight(n: int, k: int, p: int) -> int:
    """Signed double sum over shifted binomials that rebuilds C(n,k)*k^p.

    sum_{l,j} (-1)^l C(n-l,k) C(n,l) C(n-l,j-l) j! S(p,j), with l,j up to p.
    Terms with l > n vanish through C(n,l) and are skipped.
    """
    if not 0 <= k <= n:
        raise ValueError("requires 0 <= k <= n")
    if p < 0:
        raise ValueError("p must be >= 0")
    total = 0
    for l in range(min(p, n) + 1):
        outer = binom_int(n, l) * binom_int(n - l, k)
        if outer == 0:
            continue
        inner = sum(
            binom_int(n - l, j - l) * math.factorial(j) * stirling2(p, j)
            for j in range(l, p + 1)
        )
        total += (-1) ** l * outer * inner
    return total


def _scaled_binom(coef: int, n: int, k: int) -> int:
    # lazily guards binom_int against negative n when the multiplier vanishes
    return coef * binom_int(n, k) if coef else 0


def sanchez_weight_p1(n: int, k: int) -> int:
    """Printed p = 1 specialization: n*C(n,k) - n*C(n-1,k)."""
    return _scaled_binom(n, n, k) - _scaled_binom(n, n - 1, k)


def sanchez_weight_p2(n: int, k: int) -> int:
    """Printed p = 2 specialization: n^2*C(n,k) - n(2n-1)*C(n-1,k) + n(n-1)*C(n-2,k)."""
    return (
        _scaled_binom(n * n, n, k)
        - _scaled_binom(n * (2 * n - 1), n - 1, k)
        + _scaled_binom(n * (n - 1), n - 2, k)
    )


def sanchez_weight_p3(n: int, k: int) -> int:
    """Printed p = 3 specialization with four shifted binomials."""
    return (
        _scaled_binom(n**3, n, k)
        - _scaled_binom(n * (3 * n * n - 3 * n + 1), n - 1, k)
        + _scaled_binom(3 * n * (n - 1) ** 2, n - 2, k)
        - _scaled_binom(n * (n - 1) * (n - 2), n - 3, k)
    )


def sanchez_transform(b: Sequence[RatLike], n: int, p: int) -> Fraction:
    """sum_k C(n,k) k^p a_k recovered from the plain transform b of a.

    Valid for p <= n; larger p raises OutOfValidityRangeError rather than
    returning a silently wrong value.
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    if p > n:
        raise OutOfValidityRangeError(f"weighted transform needs p <= n, got p={p}, n={n}")
    if len(b) < n + 1:
        raise ValueError("b must provide indices 0..n")
    total = Fraction(0)
    for l in range(p + 1):
        outer = binom_int(n, l)
        if outer == 0:
            continue
        inner = sum(
            binom_int(n - l, j - l) * math.factorial(j) * stirling2(p, j)
            for j in range(l, p + 1)
        )
        total += (-1) ** l * outer * inner * Fraction(b[n - l])
    return total


def weighted_nabla(b: Sequence[RatLike], n: int, m: int) -> Fraction:
    """sum_{j=0..n} C(n,j) C(j,n-m) (-1)^(n-j) b_j  (the C(n,m)-weighted nabla^m)."""
    if not 0 <= m <= n:
        raise ValueError("requires 0 <= m <= n")
    if len(b) < n + 1:
        raise ValueError("b must provide indices 0..n")
    total = Fraction(0)
    for j in range(n + 1):
        c = binom_int(n, j) * binom_int(j, n - m)
        if c:
            total += (-1) ** (n - j) * c * Fraction(b[j])
    return total
