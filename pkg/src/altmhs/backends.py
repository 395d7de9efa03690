"""Evaluation backends for congruence checks.

A check is written once as a formula over a backend ``ev``; the backend
decides what the values are:

* ``ExactBackend``: exact rationals (``Fraction``/``int``), reduced at the end.
* ``FastBackend``: ``PadicScaled`` values carried to ``p**precision`` and fed by
  the compiled (or pure-Python) O(p) kernels.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from . import kernels
from .bernoulli import bernoulli_exact, bernoulli_mod_p, fermat_quotient, fermat_quotient_exact
from .exact import binom_exact, rational_reduce_mod
from .mhs import mhs_exact, mhs_mod, twisted_power_sum_exact
from .modular import PadicScaled, Residue, binom_mod

__all__ = ["ExactBackend", "FastBackend", "MAX_FAST_PRIME", "make_backend"]

# residues mod p^4 must fit in 64 bits
MAX_FAST_PRIME = 2**16


class ExactBackend:
    name = "exact"

    def __init__(self, p: int):
        self.p = p
        self._expansion: dict = {}

    def H(self, sig, n: int) -> Fraction:
        return mhs_exact(tuple(sig), n)

    @cached_property
    def q(self) -> Fraction:
        return Fraction(fermat_quotient_exact(2, self.p))

    def B(self, m: int) -> Fraction:
        return bernoulli_exact(m)

    def binom(self, n: int, r: int) -> Fraction:
        # Fraction, not int: formulas divide these and must stay exact
        return Fraction(binom_exact(n, r))

    def twisted(self, x: int, r: int, n: int) -> Fraction:
        return twisted_power_sum_exact(x, r, n)

    def power(self, base: int, e: int) -> Fraction:
        return Fraction(base) ** e

    @cached_property
    def central_binomial_sum(self) -> Fraction:
        """sum_{k=1}^{p-1} C(2k, k) / (k 4^k)."""
        p = self.p
        total = Fraction(0)
        for k in range(1, p):
            total += Fraction(binom_exact(2 * k, k), k * 4**k)
        return total

    @cached_property
    def binom2p_sums(self) -> tuple[Fraction, Fraction]:
        p = self.p
        single = Fraction(0)
        double = Fraction(0)
        prefix = 0
        for d in range(1, p):
            c = binom_exact(2 * p, d)
            t = Fraction(-1 if d % 2 else 1, p - d)
            single += t * c
            double += t * prefix
            prefix += c
        return single, double

    def binom2p_expansion(self, k: int):
        if k not in self._expansion:
            self._expansion[k] = self._binom2p_expansion(k)
        return self._expansion[k]

    def _binom2p_expansion(self, k: int):
        p = self.p
        h = Fraction(0)
        j, lhs, rhs = 0, 0, 0
        for j in range(1, p):
            lhs = binom_exact(2 * p, j)
            rhs = (-1) ** (j % 2) * (-2 * p + 4 * p * p * h) / j
            if rational_reduce_mod(lhs, p, k) != rational_reduce_mod(rhs, p, k):
                break
            h += Fraction(1, j)
        return j, lhs, rhs

    def reduce(self, value, k: int) -> Residue:
        return rational_reduce_mod(value, self.p, k)


class FastBackend:
    name = "fast"

    def __init__(self, p: int, precision: int):
        if p >= MAX_FAST_PRIME:
            raise OverflowError(f"p={p} is above the fast-backend bound {MAX_FAST_PRIME}")
        self.p = p
        self.precision = precision
        self.modulus = p**precision
        self._h: dict = {}
        self._expansion: dict = {}

    def _wrap(self, value: int) -> PadicScaled:
        return PadicScaled.from_residue(value, self.p, self.precision)

    def H(self, sig, n: int) -> PadicScaled:
        key = (tuple(sig), n)
        v = self._h.get(key)
        if v is None:
            v = self._h[key] = self._wrap(mhs_mod(key[0], n, self.p, self.precision).value)
        return v

    @cached_property
    def q(self) -> PadicScaled:
        return self._wrap(fermat_quotient(2, self.p, self.precision).value)

    def B(self, m: int) -> PadicScaled:
        p = self.p
        if m == 0:
            return PadicScaled.from_rational(1, p, self.precision)
        if m == 1:
            return PadicScaled.from_rational(Fraction(-1, 2), p, self.precision)
        if m % 2:
            return PadicScaled.zero(p)
        # only B mod p is known, so this value carries one digit
        return PadicScaled.from_residue(bernoulli_mod_p(m, p))

    def binom(self, n: int, r: int) -> PadicScaled:
        return binom_mod(n, r, self.p, self.precision)

    def twisted(self, x: int, r: int, n: int) -> PadicScaled:
        return self._wrap(kernels.twisted_power_sum(x, r, n, self.modulus))

    def power(self, base: int, e: int) -> PadicScaled:
        return self._wrap(pow(base, e, self.modulus))

    @cached_property
    def central_binomial_sum(self) -> PadicScaled:
        return self._wrap(kernels.central_binomial_sum(self.p, self.modulus))

    @cached_property
    def binom2p_sums(self) -> tuple[PadicScaled, PadicScaled]:
        single, double = kernels.binom2p_sums(self.p, self.modulus)
        return self._wrap(single), self._wrap(double)

    def binom2p_expansion(self, k: int):
        if k not in self._expansion:
            j, lhs, rhs = kernels.binom2p_expansion(self.p, self.p**k)
            self._expansion[k] = (j, PadicScaled.from_residue(lhs, self.p, k),
                              PadicScaled.from_residue(rhs, self.p, k))
        return self._expansion[k]

    def reduce(self, value, k: int) -> Residue:
        if not isinstance(value, PadicScaled):
            value = PadicScaled.from_rational(value, self.p, k)
        return value.to_residue(k)


def make_backend(name: str, p: int, precision: int):
    if name == "exact":
        return ExactBackend(p)
    if name == "fast":
        return FastBackend(p, precision)
    raise ValueError(f"unknown backend {name!r}")
