#!/usr/bin/env python3
"""Truncated power series and polynomial certification.

Series identities are proved coefficient-by-coefficient through a chosen
order; identities polynomial in alpha are proved exactly for each n by
comparing coefficient vectors.
"""

from fractions import Fraction

from ghn import (
    TruncSeries,
    check_series_lemma,
    certify_alpha_identity,
    geometric,
    harmonic_p,
    harmonic_poly,
    log_one_minus,
)
from ghn.registry import (
    gen_harmonic_poly_lhs,
    gen_harmonic_poly_rhs,
    idi1_poly_lhs,
    idi1_poly_rhs,
)

# The generating function of the generalized harmonic numbers:
#   log(1 - alpha*t) / (1 - t) = -sum H_n(alpha) t^n.
order = 12
alpha = Fraction(1, 3)
series = log_one_minus(alpha, order) * geometric(1, order)
print("coefficients of log(1-t/3)/(1-t):")
print("  ", [str(c) for c in series.coeffs[:7]])
print("  -H_n(1/3):", [str(-harmonic_p(n, 1, alpha)) for n in range(7)])

# Series arithmetic: reciprocal and composition stay exact.
s = TruncSeries([1, -1], 8)
print("\n1/(1-t) =", s.recip())
f = TruncSeries([0, 0, 1], 6)
g = TruncSeries([0, 1, 1], 6)
print("(t+t^2)^2 via composition =", f.compose(g))

# The composition identity behind the grid-product transform:
#   f(mu*t/(1-lam*t)) / (1-lam*t) has coefficients sum C(n,k) mu^k lam^(n-k) a_k.
a = [-harmonic_p(k, 1, Fraction(2, 5)) for k in range(41)]
ok = check_series_lemma(40, Fraction(2, 3), Fraction(5, 7), a)
print("\ncomposition identity exact through order 40:", ok)

# Polynomial certification: both sides of an alpha-identity are polynomials
# of degree n, so coefficient equality is a proof for that n.
print("\nH_2 as a polynomial in alpha:", harmonic_poly(2, 1))
print("certify H_n(a) = H_n + sum C(n,k)(a-1)^k/k for n <= 30:",
      certify_alpha_identity(gen_harmonic_poly_lhs, gen_harmonic_poly_rhs, 30))
print("certify sum (-1)^k C(n,k) H_k(a) = ((1-a)^n - 1)/n for n <= 30:",
      certify_alpha_identity(idi1_poly_lhs, idi1_poly_rhs, 30))
