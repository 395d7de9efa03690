"""Exact integer, rational and polynomial arithmetic.

Rationals are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  Everything in the package that
claims to be "exact" is checked against this layer.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .modular import Residue

BigRational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "BigRational",
    "RationalPoly",
    "binom_exact",
    "rational_padic_valuation",
    "rational_reduce_mod",
    "int_valuation",
]


def binom_exact(n: int, r: int) -> int:
    """C(n, r) for n >= 0, zero outside 0 <= r <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if r < 0 or r > n:
        return 0
    return comb(n, r)


def int_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_padic_valuation(r: Scalar, p: int) -> int:
    """v_p(numerator) - v_p(denominator) of a nonzero rational."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("p-adic valuation of 0 is +infinity")
    return int_valuation(r.numerator, p) - int_valuation(r.denominator, p)


def rational_reduce_mod(r: Scalar, p: int, k: int) -> Residue:
    """Image of ``r`` in Z/p^kZ; the denominator must be prime to p."""
    if not isinstance(r, (int, Fraction)):
        raise TypeError(f"expected an exact rational, got {type(r).__name__}")
    r = Fraction(r)
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if r.denominator % p == 0:
        raise ValueError(
            f"denominator of {r} is divisible by {p}; use PadicScaled instead"
        )
    m = p**k
    return Residue(r.numerator * pow(r.denominator, -1, m) % m, p, k)


class RationalPoly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Scalar) -> "RationalPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "RationalPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return "RationalPoly(" + " + ".join(terms) + ")"

    @staticmethod
    def monomial_sum(pairs: Sequence[tuple[int, Scalar]]) -> "RationalPoly":
        """Build sum of c * x**e from (e, c) pairs; exponents may repeat."""
        if not pairs:
            return RationalPoly()
        out = [Fraction(0)] * (max(e for e, _ in pairs) + 1)
        for e, c in pairs:
            out[e] += c
        return RationalPoly(out)
