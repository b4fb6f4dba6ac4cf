"""Closed-form evaluators for the catalogued identities.

Every function here evaluates one side of an identity and returns an exact
value; none of them asserts its own correctness.  Agreement with the
direct-summation oracles is established solely by the verifier, which is what
lets demonstrably typo'd source formulas be evaluated as printed and reported
honestly.  Ratio sums always start at k = 1 (the k = 0 term carries a 1/k
factor), and 0^0 = 1 throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, OutOfValidityRangeError
from .exact import RatLike, binom_int, binom_rat
from .sequences import harmonic, harmonic_p, stirling2
from .transforms import binomial_transform, inverse_binomial_transform, weighted_nabla


def check_lambda_domain(lam: RatLike, n: int) -> Fraction:
    """Reject lambda in {-1, ..., -n}, where the telescoped products vanish."""
    lam = Fraction(lam)
    if lam.denominator == 1 and -n <= lam <= -1:
        raise DomainError(f"lambda={lam} is excluded for n={n}")
    return lam


def lemma21_lhs(b: Sequence[RatLike], n: int, lam: RatLike) -> Fraction:
    """n! * sum_{m=1..n} b_m / (m! (lam+m)(lam+m+1)...(lam+n)), summed directly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = check_lambda_domain(lam, n)
    if len(b) < n + 1:
        raise ValueError("b must provide indices 0..n")
    suffix = [Fraction(1)] * (n + 2)  # suffix[m] = (lam+m)...(lam+n)
    for m in range(n, 0, -1):
        suffix[m] = (lam + m) * suffix[m + 1]
    total = Fraction(0)
    mfact = 1
    for m in range(1, n + 1):
        mfact *= m
        total += Fraction(b[m]) / (mfact * suffix[m])
    return math.factorial(n) * total


def lemma21_rhs(b: Sequence[RatLike], n: int, lam: RatLike) -> Fraction:
    """Branch-selected closed form of lemma21_lhs.

    lam = 0: sum b_m/m; otherwise sum C(lam-1+m, m) b_m / (lam C(lam+n, n)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = check_lambda_domain(lam, n)
    if len(b) < n + 1:
        raise ValueError("b must provide indices 0..n")
    if lam == 0:
        return sum(Fraction(b[m]) / m for m in range(1, n + 1))
    total = Fraction(0)
    c = Fraction(1)  # C(lam-1+m, m), built incrementally
    for m in range(1, n + 1):
        c = c * (lam - 1 + m) / m
        total += c * Fraction(b[m])
    return total / (lam * binom_rat(lam + n, n))


def lemma21_rhs_ones(n: int, lam: RatLike, as_printed: bool = False) -> Fraction:
    """The b == 1 specialization of lemma21_rhs.

    The hockey-stick sum collapses the numerator to C(lam+n, n) - 1.  With
    ``as_printed`` the lower index n-1 of the source display is kept instead;
    the registry records how that variant fares against the oracle.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = check_lambda_domain(lam, n)
    if lam == 0:
        return harmonic(n)
    top = binom_rat(lam + n, n - 1) if as_printed else binom_rat(lam + n, n)
    return (top - 1) / (lam * binom_rat(lam + n, n))


def boyadzhiev_ratio_closed(a: Sequence[RatLike], n: int, lam: RatLike) -> Fraction:
    """Closed form of sum_{k=1..n} C(n,k) a_k/(k+lam), through the transform b of a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = check_lambda_domain(lam, n)
    b = binomial_transform([Fraction(v) for v in a[: n + 1]])
    if lam == 0:
        return sum(b[m] / m for m in range(1, n + 1)) - b[0] * harmonic(n)
    big = binom_rat(lam + n, n)
    total = Fraction(0)
    c = Fraction(1)
    for m in range(1, n + 1):
        c = c * (lam - 1 + m) / m
        total += c * b[m]
    return (total - b[0] * (big - 1)) / (lam * big)


def lambda1_case_rhs(a: Sequence[RatLike], n: int) -> Fraction:
    """lam = 1 simplification: (sum_{m=1..n} b_m - n b_0) / (n+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = binomial_transform([Fraction(v) for v in a[: n + 1]])
    return (sum(b[1:]) - n * b[0]) / (n + 1)


def knuth_flajolet_rhs(n: int, lam: RatLike) -> Fraction:
    """1 / (lam * C(lam+n, n)), the alternating ratio-sum closed form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lam = Fraction(lam)
    if lam == 0:
        raise DomainError("lambda = 0 is a pole of the alternating ratio sum")
    lam = check_lambda_domain(lam, n)
    return 1 / (lam * binom_rat(lam + n, n))


def generalized_harmonic_relation(n: int, alpha: RatLike) -> Fraction:
    """H_n + sum_{k=1..n} C(n,k) (alpha-1)^k / k; evaluates to H_n(alpha)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = Fraction(alpha) - 1
    total = harmonic(n)
    power = Fraction(1)
    for k in range(1, n + 1):
        power *= d
        total += binom_int(n, k) * power / k
    return total


def second_case_ones_rhs(n: int) -> Fraction:
    """sum_{m=1..n} 2^m/m - H_n, the a == 1 case of the ratio-sum theorem."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return harmonic_p(n, 1, 2) - harmonic(n)


def gould_generalized_lhs(n: int, j: int, a: RatLike) -> Fraction:
    """sum_{k=max(j,1)..n} C(n,k) C(k,j) (-a)^k / k  (k = 0 is excluded)."""
    if n < 1 or j < 0:
        raise ValueError("requires n >= 1 and j >= 0")
    a = Fraction(a)
    total = Fraction(0)
    for k in range(max(j, 1), n + 1):
        c = binom_int(n, k) * binom_int(k, j)
        if c:
            total += c * (-a) ** k / k
    return total


def gould_generalized_rhs(n: int, j: int, a: RatLike) -> Fraction:
    """sum_{t=1..n} C(t,j) (-a)^j (1-a)^(t-j) / t, skipping vanishing binomials."""
    if n < 1 or j < 0:
        raise ValueError("requires n >= 1 and j >= 0")
    a = Fraction(a)
    total = Fraction(0)
    for t in range(1, n + 1):
        c = binom_int(t, j)
        if c:
            total += c * (-a) ** j * (1 - a) ** (t - j) / t
    return total


def pan_closed_form(n: int, mu: RatLike, lam: RatLike, alpha: RatLike) -> Fraction:
    """Closed form of sum_k C(n,k) mu^k lam^(n-k) H_k(alpha).

    (mu+lam)^n (H_n((lam+mu*alpha)/(mu+lam)) - H_n(lam/(mu+lam))), or
    lam^n ((1-alpha)^n - 1)/n when mu + lam = 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    mu, lam, alpha = Fraction(mu), Fraction(lam), Fraction(alpha)
    s = mu + lam
    if s == 0:
        return lam**n * ((1 - alpha) ** n - 1) / n
    return s**n * (harmonic_p(n, 1, (lam + mu * alpha) / s) - harmonic_p(n, 1, lam / s))


def idi1_rhs(n: int, alpha: RatLike) -> Fraction:
    """((1-alpha)^n - 1)/n: the alternating transform of H_k(alpha)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ((1 - Fraction(alpha)) ** n - 1) / n


def spivey_rhs(n: int, alpha: RatLike) -> Fraction:
    """2^n (H_n((1+alpha)/2) - H_n(1/2))."""
    alpha = Fraction(alpha)
    return 2**n * (harmonic_p(n, 1, (1 + alpha) / 2) - harmonic_p(n, 1, Fraction(1, 2)))


def frontczak_rhs(n: int) -> Fraction:
    """-3^n (H_n(-1/3) - H_n(1/3))."""
    return -(3**n) * (harmonic_p(n, 1, Fraction(-1, 3)) - harmonic_p(n, 1, Fraction(1, 3)))


def skew_transform_rhs(n: int) -> Fraction:
    """2^n H_n(1/2)."""
    return 2**n * harmonic_p(n, 1, Fraction(1, 2))


def thm33_rhs(c: Sequence[RatLike], n: int, alpha: RatLike) -> Fraction:
    """Decomposed form of sum_k C(n,k) (-1)^k H_k(alpha) c_k.

    Uses d = inverse binomial transform of c:
      (-1)^n d_n H_n(alpha) - sum_{m<n} d_m (-1)^m/(n-m)
      + [alpha != 1] sum_{m<n} d_m (-1)^m (1-alpha)^(n-m)
                     sum_{t=n-m..n} C(t, n-m) alpha^(t-(n-m)) / t.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha = Fraction(alpha)
    d = inverse_binomial_transform([Fraction(v) for v in c[: n + 1]])
    total = (-1) ** n * d[n] * harmonic_p(n, 1, alpha)
    for m in range(n):
        total -= d[m] * Fraction((-1) ** m, n - m)
    if alpha != 1:
        one_minus = 1 - alpha
        for m in range(n):
            if d[m] == 0:
                continue
            r = n - m
            inner = Fraction(0)
            for t in range(r, n + 1):
                ct = binom_int(t, r)
                if ct:
                    inner += ct * alpha ** (t - r) / t
            total += d[m] * (-1) ** m * one_minus**r * inner
    return total


def thm33_nabla_rhs(c: Sequence[RatLike], n: int, alpha: RatLike) -> Fraction:
    """Weighted-nabla decomposition: sum_m d_m * weighted_nabla(b, n, m).

    b_j is the alternating transform of H_k(alpha) (zero at j = 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha = Fraction(alpha)
    d = inverse_binomial_transform([Fraction(v) for v in c[: n + 1]])
    b = [Fraction(0)] + [idi1_rhs(j, alpha) for j in range(1, n + 1)]
    total = Fraction(0)
    for m in range(n + 1):
        if d[m]:
            total += d[m] * weighted_nabla(b, n, m)
    return total


def as_np_closed(n: int, p: int, z: RatLike, alpha: RatLike) -> Fraction:
    """Closed form of sum_j C(n,j) j^p H_j(alpha) z^j, valid for 1 <= p <= n.

    Feeds the z-branch transform values b_m through the Stirling double sum;
    at z = -1 the b_m come from the alternating transform (b_0 = 0 exactly,
    so the l = n corner raises no 0/0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if p < 1 or p > n:
        raise OutOfValidityRangeError(f"closed form needs 1 <= p <= n, got p={p}, n={n}")
    z, alpha = Fraction(z), Fraction(alpha)
    if z == -1:
        bvals = [Fraction(0)] + [idi1_rhs(m, alpha) for m in range(1, n + 1)]
    else:
        zp = 1 + z
        bvals = [
            zp**m * (harmonic_p(m, 1, (1 + alpha * z) / zp) - harmonic_p(m, 1, 1 / zp))
            for m in range(n + 1)
        ]
    total = Fraction(0)
    for l in range(p + 1):
        outer = binom_int(n, l)
        if outer == 0:
            continue
        inner = sum(
            binom_int(n - l, j - l) * math.factorial(j) * stirling2(p, j)
            for j in range(l, p + 1)
        )
        total += (-1) ** l * outer * inner * bvals[n - l]
    return total


def as_p1_closed(n: int, z: RatLike, alpha: RatLike) -> Fraction:
    """p = 1 expansion: n(1+z)^(n-1) {z H_(n-1)(B) - z H_(n-1)(G) + (1+z)(B^n - G^n)/n}

    with B = (1+alpha*z)/(1+z) and G = 1/(1+z); needs z != -1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    z, alpha = Fraction(z), Fraction(alpha)
    zp = 1 + z
    if zp == 0:
        raise DomainError("z = -1 lies outside this expansion")
    beta = (1 + alpha * z) / zp
    gamma = 1 / zp
    inner = z * (harmonic_p(n - 1, 1, beta) - harmonic_p(n - 1, 1, gamma))
    inner += zp * (beta**n - gamma**n) / n
    return n * zp ** (n - 1) * inner


def as_zneg1_alpha1_closed(n: int, p: int, as_printed: bool = False) -> Fraction:
    """z = -1, alpha = 1 case: (-1)^n n! S(p,n) H_n - sum_{k<n} (-1)^k k! w_k/(n-k).

    The oracle-validated weight is w_k = S(p,k); ``as_printed`` swaps in the
    source display's C(n,k) instead so the registry can report on it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if p < 1 or p > n:
        raise OutOfValidityRangeError(f"closed form needs 1 <= p <= n, got p={p}, n={n}")
    lead = (-1) ** n * math.factorial(n) * stirling2(p, n) * harmonic(n)
    tail = Fraction(0)
    for k in range(n):
        w = binom_int(n, k) if as_printed else stirling2(p, k)
        if w:
            tail += Fraction((-1) ** k * math.factorial(k) * w, n - k)
    return lead - tail


def conclusion_identity(item: str, n: int, alpha: RatLike, reading: str = "p2") -> tuple[Fraction, Fraction]:
    """(LHS, RHS) pairs for the three concluding sums.

    item2: sum (-1)^k C(n,k) H_k(alpha)      vs ((1-alpha)^n - 1)/n
    item3: sum H_k(alpha)/k                  vs the two-branch product form
    item4: sum (-1)^k H_k(alpha)/k           vs weight-2 harmonic differences

    For item3/item4 the superscript-(2) notation is ambiguous; reading="p2"
    takes it as the weight-2 sum H_n^(2)(x), reading="square" as a square.
    Neither pairing is asserted anywhere; the verifier only reports them.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if reading not in ("p2", "square"):
        raise ValueError("reading must be 'p2' or 'square'")
    alpha = Fraction(alpha)
    if item == "item2":
        lhs = Fraction(0)
        for k in range(n + 1):
            lhs += binom_int(n, k) * (-1) ** k * harmonic_p(k, 1, alpha)
        return lhs, idi1_rhs(n, alpha)
    if item == "item3":
        lhs = Fraction(0)
        for k in range(1, n + 1):
            lhs += harmonic_p(k, 1, alpha) / k
        if alpha == 1:
            h = harmonic(n)
            rhs = (h * h + harmonic_p(n, 2, 1)) / 2
        else:
            second = harmonic_p(n, 2, alpha) if reading == "p2" else harmonic_p(n, 1, alpha) ** 2
            rhs = harmonic_p(n, 1, alpha) * harmonic(n) + second
            for k in range(1, n + 1):
                rhs -= alpha**k * harmonic(k) / k
        return lhs, rhs
    if item == "item4":
        lhs = Fraction(0)
        for k in range(1, n + 1):
            lhs += (-1) ** k * harmonic_p(k, 1, alpha) / k
        if reading == "p2":
            rhs = harmonic_p(n, 2, 1 - alpha) - harmonic_p(n, 2, 1)
        else:
            rhs = harmonic_p(n, 1, 1 - alpha) ** 2 - harmonic(n) ** 2
        return lhs, rhs
    raise ValueError(f"unknown item {item!r}; expected item2, item3 or item4")
