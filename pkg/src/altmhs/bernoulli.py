"""Bernoulli numbers (exact and mod p) and Fermat quotients."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, lcm

from . import kernels
from .modular import Residue

__all__ = [
    "BernoulliCache",
    "bernoulli_exact",
    "bernoulli_mod_p",
    "fermat_quotient",
    "fermat_quotient_exact",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 4000


class BernoulliCache:
    """Append-only table of B_0, B_1, ... with B_1 = -1/2.

    Filled by the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.  Odd indices
    above 1 are stored as zero and the recurrence skips them.
    """

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = cap
        self.values: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be >= 0")
        if n > self.cap:
            raise ValueError(f"B_{n} exceeds the configured cap {self.cap}")
        if n >= len(self.values):
            with self._lock:
                self._extend(n)
        return self.values[n]

    def _extend(self, n: int) -> None:
        vals = self.values
        while len(vals) <= n:
            m = len(vals)
            if m % 2:
                vals.append(Fraction(0))
                continue
            # B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j ; only j = 1 and even j
            # contribute.  Summed over a common denominator to skip per-term gcds.
            den = 2
            for j in range(2, m, 2):
                den = lcm(den, vals[j].denominator)
            s = den - (m + 1) * (den // 2)
            for j in range(2, m, 2):
                b = vals[j]
                s += comb(m + 1, j) * b.numerator * (den // b.denominator)
            vals.append(Fraction(-s, den * (m + 1)))
        assert vals[0] == 1 and vals[1] == Fraction(-1, 2)
        assert all(vals[i] == 0 for i in range(3, len(vals), 2))


_cache = BernoulliCache()


def bernoulli_exact(n: int) -> Fraction:
    return _cache[n]


def bernoulli_mod_p(m: int, p: int) -> Residue:
    """B_m mod p for even 2 <= m <= p - 3, from sum_{k<p} k^m = p B_m (mod p^2)."""
    if m % 2:
        raise ValueError(f"m={m} must be even")
    if not 2 <= m <= p - 3:
        raise ValueError(f"need 2 <= m <= p-3, got m={m}, p={p}")
    t = kernels.power_sum(m, p - 1, p * p)
    if t % p:
        raise ArithmeticError(f"power sum of degree {m} mod {p}^2 is not divisible by {p}")
    return Residue(t // p % p, p, 1)


def fermat_quotient_exact(x: int, p: int) -> int:
    if x % p == 0:
        raise ValueError(f"{p} divides {x}")
    q, r = divmod(x ** (p - 1) - 1, p)
    assert r == 0
    return q


def fermat_quotient(x: int, p: int, k: int) -> Residue:
    """q_p(x) = (x^(p-1) - 1)/p reduced mod p^k."""
    if x % p == 0:
        raise ValueError(f"{p} divides {x}")
    t = pow(x, p - 1, p ** (k + 1)) - 1
    return Residue.of(t // p, p, k)
