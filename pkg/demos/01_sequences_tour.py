#!/usr/bin/env python3
"""Tour of the exact sequence generators.

Everything prints as exact fractions; nothing here is floating point.
"""

from fractions import Fraction

from ghn import (
    bernoulli,
    fibonacci,
    harmonic,
    harmonic_p,
    laguerre,
    lucas,
    materialize,
    parse_seq_spec,
    skew_harmonic,
    stirling2,
)

# Plain harmonic numbers H_n = 1 + 1/2 + ... + 1/n
print("harmonic numbers:")
for n in range(8):
    print(f"  H_{n} = {harmonic(n)}")

# The generalized family H_n(alpha) = sum alpha^j / j scales each term by a
# geometric weight.  alpha = 1 recovers H_n, alpha = -1 the (negated)
# skew-harmonic numbers.
alpha = Fraction(1, 2)
print(f"\ngeneralized harmonic numbers at alpha = {alpha}:")
for n in range(6):
    print(f"  H_{n}({alpha}) = {harmonic_p(n, 1, alpha)}")

print("\nskew-harmonic numbers and the sign convention H_n^- = -H_n(-1):")
for n in range(1, 6):
    print(f"  H_{n}^- = {skew_harmonic(n)}   -H_{n}(-1) = {-harmonic_p(n, 1, -1)}")

# Weight-2 sums are available through the same entry point.
print("\nweight-2 harmonic numbers H_n^(2):")
print("  ", [str(harmonic_p(n, 2, 1)) for n in range(6)])

# Stirling numbers of the second kind count set partitions.
print("\nStirling2 triangle rows 0..5:")
for p in range(6):
    print("  ", [stirling2(p, j) for j in range(p + 1)])

# Fibonacci, Lucas, Bernoulli, Laguerre round out the registry's sequences.
print("\nFibonacci:", [fibonacci(n) for n in range(10)])
print("Lucas:    ", [lucas(n) for n in range(10)])
print("Bernoulli:", [str(bernoulli(n)) for n in range(9)])
print("Laguerre L_n(1/2):", [str(laguerre(n, Fraction(1, 2))) for n in range(6)])

# The same sequences can be named by a compact text form, which is what the
# command line uses.
spec = parse_seq_spec("fibonacci:doubled=true")
print("\nmaterialize('fibonacci:doubled=true', 8) =", [str(v) for v in materialize(spec, 8)])
