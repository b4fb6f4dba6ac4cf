"""Dense polynomials and truncated power series over exact rationals.

``PolyQ`` certifies identities that are polynomial in a parameter by
coefficient-wise comparison; ``TruncSeries`` proves series identities through
a chosen order.  Both print as ``"c0 + c1*t + ..."`` and export their
coefficients as arrays of ``"p/q"`` strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import CompositionDomainError, NotAUnitError
from .exact import RatLike


def _format_terms(coeffs: tuple[Fraction, ...]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = f"{abs(c)}" if i == 0 else (f"{abs(c)}*t" if i == 1 else f"{abs(c)}*t^{i}")
        if not terms:
            terms.append(f"-{mag}" if c < 0 else mag)
        else:
            terms.append(f"- {mag}" if c < 0 else f"+ {mag}")
    return " ".join(terms) if terms else "0"


class PolyQ:
    """Dense univariate polynomial over Fraction, stored in canonical form.

    The coefficient tuple never has trailing zeros; the zero polynomial is the
    empty tuple (degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: RatLike) -> "PolyQ":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self.coeffs)

    def __add__(self, other: "PolyQ") -> "PolyQ":
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyQ):
            if self.is_zero() or other.is_zero():
                return PolyQ()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return PolyQ(out)
        return PolyQ(c * Fraction(other) for c in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyQ":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = PolyQ([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, at: RatLike) -> Fraction:
        at = Fraction(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def __str__(self) -> str:
        return _format_terms(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def harmonic_poly(n: int, p: int = 1) -> PolyQ:
    """H_n^(p) as a polynomial in alpha: coefficient 1/j^p at degree j."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if p < 1:
        raise ValueError("p must be >= 1")
    return PolyQ([Fraction(0)] + [Fraction(1, j**p) for j in range(1, n + 1)])


class TruncSeries:
    """Power series over Fraction kept through a fixed order (inclusive).

    Binary operations truncate to the smaller operand order; composition keeps
    the outer series' order, zero-extending the inner argument as needed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        elif not cs:
            raise ValueError("an empty coefficient list needs an explicit order")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: RatLike, order: int) -> "TruncSeries":
        return cls([c], order)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return TruncSeries(out)
        return TruncSeries([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def recip(self) -> "TruncSeries":
        """Multiplicative inverse up to the truncation order."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise NotAUnitError("series with zero constant term has no reciprocal")
        inv0 = 1 / a0
        out = [inv0]
        for k in range(1, self.order + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    s += self.coeffs[i] * out[k - i]
            out.append(-inv0 * s)
        return TruncSeries(out)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner), by Horner; inner must have zero constant term."""
        if not isinstance(inner, TruncSeries):
            raise TypeError("compose expects a TruncSeries")
        if inner.coeffs[0] != 0:
            raise CompositionDomainError("inner series must have zero constant term")
        n = self.order
        g = TruncSeries(inner.coeffs, n)
        acc = TruncSeries.constant(self.coeffs[-1], n)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * g + TruncSeries.constant(c, n)
        return acc

    def __str__(self) -> str:
        return _format_terms(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def log_one_minus(c: RatLike, order: int) -> TruncSeries:
    """Series of ln(1 - c*t): coefficient -c^k/k at t^k, zero constant term."""
    if order < 0:
        raise ValueError("order must be >= 0")
    c = Fraction(c)
    coeffs = [Fraction(0)]
    power = Fraction(1)
    for k in range(1, order + 1):
        power *= c
        coeffs.append(-power / k)
    return TruncSeries(coeffs, order)


def geometric(c: RatLike, order: int) -> TruncSeries:
    """Series of 1/(1 - c*t): coefficient c^k at t^k."""
    if order < 0:
        raise ValueError("order must be >= 0")
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * c)
    return TruncSeries(coeffs, order)
