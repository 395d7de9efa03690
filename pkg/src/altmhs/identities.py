"""Exact (non-congruence) identities, checked over the rationals.

* the Riordan-array identity, for n >= d >= 1, as polynomials in x:
      d * sum_{k=1}^{n} C(2k, k+d) x^(n-k) / k
          = sum_{k=0}^{n-d} C(2n, n+d+k) v_k(x) - C(2n, n+d)
  with v_0 = 2, v_1 = x - 2, v_{k+1} = (x - 2) v_k - v_{k-1};
* its x = 4 specialisation for the central binomial sum;
* the alternating row sum of C(2k, .);
* the two equalities expressing H(-a; n) and H(-a, -a; n) through
  non-alternating sums.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import RationalPoly, binom_exact
from .mhs import mhs_exact

__all__ = [
    "VSequence",
    "v_sequence",
    "riordan_sides",
    "riordan_identity_check",
    "central_binomial_lhs",
    "corollary32_rhs",
    "corollary32_check",
    "alt_row_check",
    "theorem21_exact_check",
]

Scalar = Union[int, Fraction, RationalPoly]


@dataclass(frozen=True)
class VSequence:
    x: Scalar
    terms: tuple


def v_sequence(x: Scalar, m: int) -> VSequence:
    """v_0 .. v_m; pass ``RationalPoly.x()`` for the symbolic sequence."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if isinstance(x, RationalPoly):
        terms = [RationalPoly.const(2), x - 2]
    else:
        x = Fraction(x)
        terms = [Fraction(2), x - 2]
    while len(terms) < m + 1:
        terms.append((x - 2) * terms[-1] - terms[-2])
    return VSequence(x, tuple(terms[: m + 1]))


def riordan_sides(n: int, d: int, x: Scalar | None = None):
    """Both sides of the Riordan identity, as polynomials (or at a point ``x``)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    lhs = RationalPoly.monomial_sum(
        [(n - k, Fraction(d * binom_exact(2 * k, k + d), k)) for k in range(1, n + 1)]
    )
    v = v_sequence(RationalPoly.x(), n - d).terms
    rhs = RationalPoly.const(-binom_exact(2 * n, n + d))
    for k in range(n - d + 1):
        rhs = rhs + binom_exact(2 * n, n + d + k) * v[k]
    if x is None:
        return lhs, rhs
    return lhs(x), rhs(x)


def riordan_identity_check(n: int, d: int) -> bool:
    lhs, rhs = riordan_sides(n, d)
    return lhs == rhs


def central_binomial_lhs(n: int) -> Fraction:
    """4^n sum_{k=1}^{n} (-1)^k C(-1/2, k) / k, using (-1)^k C(-1/2, k) = C(2k, k) / 4^k."""
    return sum((Fraction(4 ** (n - k) * binom_exact(2 * k, k), k) for k in range(1, n + 1)),
               Fraction(0))


def corollary32_rhs(n: int) -> Fraction:
    sign = -1 if n % 2 else 1
    prefix = 0          # sum_{j<d} C(2n, j)
    double = Fraction(0)
    single = Fraction(0)
    for d in range(n):
        c = binom_exact(2 * n, d)
        term = Fraction(-1 if d % 2 else 1, n - d)
        double += term * prefix
        single += term * c
        prefix += c
    return -4 * sign * double - 2 * sign * single


def corollary32_check(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be >= 1")
    return central_binomial_lhs(n) == corollary32_rhs(n)


def alt_row_check(k: int) -> bool:
    """sum_{d=-k}^{k} (-1)^d C(2k, k+d) == 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum((-1) ** (d % 2) * binom_exact(2 * k, k + d) for d in range(-k, k + 1)) == 0


def theorem21_exact_check(a: int, n: int) -> bool:
    """H(-a;n) = -H(a;n) + 2^(1-a) H(a;n/2) and 2H(-a,-a;n) = H(-a;n)^2 - H(2a;n)."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if n % 2:
        raise ValueError(f"n={n} must be even")
    h_neg = mhs_exact((-a,), n)
    first = h_neg == -mhs_exact((a,), n) + Fraction(1, 2 ** (a - 1)) * mhs_exact((a,), n // 2)
    second = 2 * mhs_exact((-a, -a), n) == h_neg**2 - mhs_exact((2 * a,), n)
    return first and second
