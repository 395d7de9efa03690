"""Alternating multiple harmonic sums H(a_1, ..., a_r; n).

    H(a_1, ..., a_r; n) = sum over 1 <= k_1 < ... < k_r <= n of
                          prod_i sign(a_i)**k_i / k_i**|a_i|
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from . import kernels
from .modular import Residue

__all__ = [
    "Signature",
    "oplus",
    "mhs_exact",
    "mhs_mod",
    "naive_mhs",
    "stuffle_product",
    "reversal_pair",
    "twisted_power_sum",
    "twisted_power_sum_exact",
]


@dataclass(frozen=True)
class Signature:
    """Ordered tuple of nonzero integers naming an alternating MHS."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(a) for a in entries)
        if not entries:
            raise ValueError("a signature needs at least one entry")
        if any(a == 0 for a in entries):
            raise ValueError(f"signature entries must be nonzero: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse ``"-1,-2"`` (brackets and spaces tolerated)."""
        text = text.strip().strip("()[]")
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(abs(a) for a in self.entries)

    @property
    def token(self) -> str:
        """Compact id form, e.g. (1, -1, 2) -> ``"1M12"``."""
        return "".join(f"M{-a}" if a < 0 else str(a) for a in self.entries)

    def reversed(self) -> "Signature":
        return Signature(reversed(self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _sig(sig) -> Signature:
    return sig if isinstance(sig, Signature) else Signature(sig)


def oplus(a: int, b: int) -> int:
    """a (+) b = sign(ab) (|a| + |b|)."""
    return (1 if (a > 0) == (b > 0) else -1) * (abs(a) + abs(b))


@lru_cache(maxsize=4096)
def _mhs_exact(entries: tuple[int, ...], n: int) -> Fraction:
    r = len(entries)
    if n < r:
        return Fraction(0)
    # Scale level i by L**(|a_1| + ... + |a_i|), L = lcm(1..n), so the whole
    # recurrence runs on integers and is normalised once at the end.
    L = lcm(*range(1, n + 1))
    acc = [1] + [0] * r
    powers: dict[int, int] = {}
    for m in range(1, n + 1):
        q = L // m
        powers.clear()
        lo = max(1, r - (n - m))
        for i in range(min(r, m), lo - 1, -1):
            prev = acc[i - 1]
            if not prev:
                continue
            a = entries[i - 1]
            w = abs(a)
            t = powers.get(w)
            if t is None:
                t = powers[w] = q**w
            if a < 0 and m & 1:
                acc[i] -= prev * t
            else:
                acc[i] += prev * t
    weight = sum(abs(a) for a in entries)
    return Fraction(acc[r], L**weight)


def mhs_exact(sig: Signature | Sequence[int], n: int) -> Fraction:
    """H(sig; n) as an exact rational; 0 when n < depth."""
    return _mhs_exact(_sig(sig).entries, n)


def naive_mhs(sig: Signature | Sequence[int], n: int) -> Fraction:
    """Literal enumeration of every index tuple.  Test-scale only."""
    entries = _sig(sig).entries
    total = Fraction(0)
    for ks in combinations(range(1, n + 1), len(entries)):
        term = Fraction(1)
        for a, k in zip(entries, ks):
            term *= Fraction((-1) ** k if a < 0 else 1, k ** abs(a))
        total += term
    return total


def mhs_mod(sig: Signature | Sequence[int], n: int, p: int, k: int) -> Residue:
    """H(sig; n) in Z/p^kZ, for n < p."""
    entries = _sig(sig).entries
    if n >= p:
        raise ValueError(f"n={n} must be < p={p}: denominators would not be units")
    if n < len(entries):
        return Residue(0, p, k)
    return Residue(kernels.mhs_mod(entries, n, p**k), p, k)


def stuffle_product(sig1, sig2) -> list[Signature]:
    """Quasi-shuffle expansion: H(sig1; n) H(sig2; n) = sum of H(s; n) over the result."""
    return [Signature(t) for t in _stuffle(_sig(sig1).entries, _sig(sig2).entries)]


def _stuffle(u: tuple[int, ...], v: tuple[int, ...]) -> list[tuple[int, ...]]:
    if not u:
        return [v]
    if not v:
        return [u]
    a, b = u[0], v[0]
    out = [(a,) + w for w in _stuffle(u[1:], v)]
    out += [(b,) + w for w in _stuffle(u, v[1:])]
    out += [(oplus(a, b),) + w for w in _stuffle(u[1:], v[1:])]
    return out


def reversal_pair(sig) -> tuple[Signature, int]:
    """(reversed signature, sign) with H(sig; p-1) = sign * H(reversed; p-1) mod p.

    Only depths 2 and 3 are supported.
    """
    sig = _sig(sig)
    if sig.depth not in (2, 3):
        raise ValueError(f"reversal is only provided for depth 2 or 3, got {sig.depth}")
    sign = -1 if sum(sig.entries) % 2 else 1
    for a in sig.entries:
        if a < 0:
            sign = -sign
    return sig.reversed(), sign


def twisted_power_sum(x: Residue, r: int, n: int) -> Residue:
    """sum_{k=1}^{n} x^k / k^r in the ring of ``x``; needs n < p."""
    if n >= x.p:
        raise ValueError(f"n={n} must be < p={x.p}")
    if r < 1:
        raise ValueError("r must be >= 1")
    return Residue(kernels.twisted_power_sum(x.value, r, n, x.modulus), x.p, x.k)


def twisted_power_sum_exact(x: int | Fraction, r: int, n: int) -> Fraction:
    total = Fraction(0)
    xp = Fraction(1)
    for k in range(1, n + 1):
        xp *= x
        total += xp / k**r
    return total
