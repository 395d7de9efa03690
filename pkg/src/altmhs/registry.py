"""Catalogue of congruence claims, each checkable at a single prime.

Every entry states ``lhs == rhs (mod p**k)`` as two formulas over a backend
(see :mod:`altmhs.backends`).  The same formula runs on exact rationals and on
the modular fast path, so a transcription error cannot hide in one backend.
Notation in the descriptions: q = q_p(2), B = B_{p-3}, h = (p-1)/2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from itertools import product
from math import comb
from typing import Any, Callable

from .mhs import Signature, reversal_pair
from .primes import next_prime_above

__all__ = ["CongruenceCheck", "registry_list", "get_check", "REGISTRY"]

Formula = Callable[[Any], Any]


@dataclass(frozen=True)
class CongruenceCheck:
    id: str
    min_prime: int
    modulus_exponent: int
    lhs: Formula = field(repr=False, compare=False)
    rhs: Formula = field(repr=False, compare=False)
    description: str = ""
    guard: int = 0          # extra p-adic digits the fast path needs

    def admissible(self, p: int) -> bool:
        return p >= self.min_prime


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _h(ev) -> int:
    return (ev.p - 1) // 2


def _H(*sig: int, half: bool = False) -> Formula:
    return lambda ev: ev.H(sig, _h(ev) if half else ev.p - 1)


def _lhs_t11(ev):
    return ev.central_binomial_sum


def _rhs_t11(ev):
    p, q = ev.p, ev.q
    return 2 * q - p * q**2 + F(2, 3) * p**2 * q**3 + F(7, 12) * p**2 * ev.B(p - 3)


def _rhs_known_ii_1(ev):
    p, q = ev.p, ev.q
    return -2 * q + p * q**2 - F(2, 3) * p**2 * q**3 - F(7, 12) * p**2 * ev.B(p - 3)


def _rhs_h_minus_one(ev):
    p, q = ev.p, ev.q
    return -2 * q + p * q**2 - F(2, 3) * p**2 * q**3 - F(1, 4) * p**2 * ev.B(p - 3)


def _s3_t1(ev):
    p = ev.p
    return (2 - ev.binom(2 * p, p)) / (4 * p)


def _build() -> list[CongruenceCheck]:
    checks: list[CongruenceCheck] = []

    def add(id, min_prime, k, lhs, rhs, description, guard=0):
        checks.append(CongruenceCheck(id, min_prime, k, lhs, rhs, description, guard))

    # central binomial sum C(2k,k)/(k 4^k) = (-1)^k C(-1/2,k)/k over 0 < k < p
    add("T11_MAIN", 5, 3, _lhs_t11, _rhs_t11,
        "sum_{0<k<p} (-1)^k C(-1/2,k)/k = 2q - pq^2 + 2/3 p^2 q^3 + 7/12 p^2 B")
    add("T11_HALF", 5, 3, _lhs_t11, lambda ev: -ev.H((1,), _h(ev)),
        "sum_{0<k<p} (-1)^k C(-1/2,k)/k = -H(1;h)")

    # H({a}^r; p-1)
    for a, r in product((1, 2, 3), repeat=2):
        ar = a * r
        if ar % 2:
            rhs = (lambda a, r, ar: lambda ev: _sign(r) * F(a * (ar + 1), 2 * (ar + 2))
                   * ev.p**2 * ev.B(ev.p - ar - 2))(a, r, ar)
            k, text = 3, f"(-1)^r a(ar+1)/(2(ar+2)) p^2 B_(p-{ar + 2})"
        else:
            rhs = (lambda a, r, ar: lambda ev: _sign(r - 1) * F(a, ar + 1)
                   * ev.p * ev.B(ev.p - ar - 1))(a, r, ar)
            k, text = 2, f"(-1)^(r-1) a/(ar+1) p B_(p-{ar + 1})"
        add(f"KNOWN_I_a{a}r{r}", next_prime_above(ar + 2), k,
            _H(*(a,) * r), rhs, f"H({{{a}}}^{r}; p-1) = {text}")

    add("KNOWN_II_1", 5, 3, _H(1, half=True), _rhs_known_ii_1,
        "H(1;h) = -2q + pq^2 - 2/3 p^2 q^3 - 7/12 p^2 B")
    for a in range(2, 7):
        if a % 2:
            rhs = (lambda a: lambda ev: -F(2**a - 2, a) * ev.B(ev.p - a))(a)
            k, text = 1, f"-(2^a-2)/a B_(p-{a})"
        else:
            rhs = (lambda a: lambda ev: F(a * (2 ** (a + 1) - 1), 2 * (a + 1))
                   * ev.p * ev.B(ev.p - a - 1))(a)
            k, text = 2, f"a(2^(a+1)-1)/(2(a+1)) p B_(p-{a + 1})"
        add(f"KNOWN_II_A{a}", next_prime_above(a + 1), k, _H(a, half=True), rhs,
            f"H({a};h) = {text}")

    for a in range(1, 5):
        for b in range(1, 6 - a):
            add(f"KNOWN_III_{a}{b}", next_prime_above(a + b + 1), 1, _H(a, b),
                (lambda a, b: lambda ev: F(_sign(b) * comb(a + b, a), a + b)
                 * ev.B(ev.p - a - b))(a, b),
                f"H({a},{b}; p-1) = (-1)^b/(a+b) C(a+b,a) B_(p-{a + b})")

    # negative-index depth <= 2 sums through nonnegative ones
    for a, b in product((1, 2, 3), repeat=2):
        add(f"T21_NEGPAIR_{a}{b}", 3, 1, _H(-a, -b),
            (lambda a, b: lambda ev: -(1 - F(1, 2 ** (a + b - 1))) * ev.H((a, b), ev.p - 1)
             - F(_sign(b), 2 ** (a + b - 1)) * ev.H((a,), _h(ev)) * ev.H((b,), _h(ev)))(a, b),
            f"H(-{a},-{b}; p-1) = -(1-2^(1-a-b)) H(a,b;p-1) - (-1)^b 2^(1-a-b) H(a;h) H(b;h)")
        add(f"T21_DECOMP_{a}{b}", 3, 1, _H(a, b),
            (lambda a, b: lambda ev: ev.H((a, b), _h(ev))
             + _sign(b) * ev.H((a,), _h(ev)) * ev.H((b,), _h(ev))
             + _sign(a + b) * ev.H((b, a), _h(ev)))(a, b),
            f"H({a},{b}; p-1) = H(a,b;h) + (-1)^b H(a;h) H(b;h) + (-1)^(a+b) H(b,a;h)")
    for a in (1, 2, 3):
        add(f"T21_EQ1_{a}", 3, 3, _H(-a),
            (lambda a: lambda ev: -ev.H((a,), ev.p - 1)
             + F(1, 2 ** (a - 1)) * ev.H((a,), _h(ev)))(a),
            f"H(-{a}; p-1) = -H(a;p-1) + 2^(1-a) H(a;h) (an equality)")
        add(f"T21_EQ2_{a}", 3, 3,
            (lambda a: lambda ev: 2 * ev.H((-a, -a), ev.p - 1))(a),
            (lambda a: lambda ev: ev.H((-a,), ev.p - 1) ** 2 - ev.H((2 * a,), ev.p - 1))(a),
            f"2H(-{a},-{a}; p-1) = H(-a;p-1)^2 - H(2a;p-1) (an equality)")

    add("C22_M1", 5, 3, _H(-1), _rhs_h_minus_one,
        "H(-1; p-1) = -2q + pq^2 - 2/3 p^2 q^3 - 1/4 p^2 B")
    add("C22_M1M1", 5, 2, _H(-1, -1),
        lambda ev: 2 * ev.q**2 - 2 * ev.p * ev.q**3 - F(1, 3) * ev.p * ev.B(ev.p - 3),
        "H(-1,-1; p-1) = 2q^2 - 2pq^3 - 1/3 p B")
    for a in range(2, 7):
        add(f"C22_MA{a}", next_prime_above(a + 1), 1, _H(-a),
            (lambda a: lambda ev: -F(2**a - 2, a * 2 ** (a - 1)) * ev.B(ev.p - a))(a),
            f"H(-{a}; p-1) = -(2^a-2)/(a 2^(a-1)) B_(p-{a})")

    for r in range(1, 5):
        add(f"T23_R{r}", next_prime_above(r + 1), 1, _H(*(1,) * (r - 1), -1),
            (lambda r: lambda ev: _sign(r - 1) * ev.twisted(2, r, ev.p - 1))(r),
            f"H({{1}}^{r - 1},-1; p-1) = (-1)^(r-1) sum_(0<k<p) 2^k/k^{r}")

    quarter_b = lambda ev: F(1, 4) * ev.B(ev.p - 3)  # noqa: E731
    depth2 = [
        ((1, -1), lambda ev: ev.q**2, "q^2"),
        ((-1, 1), lambda ev: -ev.q**2, "-q^2"),
        ((-1, 2), quarter_b, "1/4 B"),
        ((1, -2), quarter_b, "1/4 B"),
        ((2, -1), quarter_b, "1/4 B"),
        ((-2, 1), quarter_b, "1/4 B"),
        ((-1, -2), lambda ev: -F(3, 4) * ev.B(ev.p - 3), "-3/4 B"),
        ((-2, -1), lambda ev: F(3, 4) * ev.B(ev.p - 3), "3/4 B"),
    ]
    for sig, rhs, text in depth2:
        s = Signature(sig)
        add(f"C24_{s.token}", 5, 1, _H(*sig), rhs, f"H{s} with bound p-1 = {text}")
    add("AUX_GR04", 5, 1, lambda ev: ev.twisted(2, 2, ev.p - 1), lambda ev: -ev.q**2,
        "sum_(0<k<p) 2^k/k^2 = -q^2")

    def qb(cq, cb):
        return lambda ev: cq * ev.q**3 + cb * ev.B(ev.p - 3)

    depth3 = [
        ((-1, 1, -1), lambda ev: 0, "0"),
        ((1, 1, -1), qb(F(-1, 3), F(-7, 24)), "-1/3 q^3 - 7/24 B"),
        ((-1, 1, 1), qb(F(-1, 3), F(-7, 24)), "-1/3 q^3 - 7/24 B"),
        ((-1, -1, 1), qb(1, F(7, 8)), "q^3 + 7/8 B"),
        ((1, -1, -1), qb(-1, F(-7, 8)), "-q^3 - 7/8 B"),
        ((1, -1, 1), qb(F(2, 3), F(1, 12)), "2/3 q^3 + 1/12 B"),
        ((-1, -1, -1), qb(F(-4, 3), F(-1, 6)), "-4/3 q^3 - 1/6 B"),
    ]
    for sig, rhs, text in depth3:
        s = Signature(sig)
        add(f"C25_{s.token}", 5, 1, _H(*sig), rhs, f"H{s} with bound p-1 = {text}")
    add("AUX_DISK06", 5, 1, lambda ev: ev.twisted(2, 3, ev.p - 1),
        lambda ev: -F(1, 3) * ev.q**3 + F(7, 12) * ev.H((-3,), ev.p - 1),
        "sum_(0<k<p) 2^k/k^3 = -1/3 q^3 + 7/12 H(-3;p-1)")

    add("L33_J", 3, 3, lambda ev: ev.binom2p_expansion(3)[1], lambda ev: ev.binom2p_expansion(3)[2],
        "C(2p,j) = -2p(-1)^j/j + 4p^2 (-1)^j/j H(1;j-1) for every 0<j<p "
        "(values shown for the first failing j, else j = p-1)")
    add("L33_P", 5, 4, lambda ev: ev.binom(2 * ev.p, ev.p),
        lambda ev: 2 - F(4, 3) * ev.p**3 * ev.B(ev.p - 3),
        "C(2p,p) = 2 - 4/3 p^3 B")

    add("S3_T1", 5, 3, _s3_t1, lambda ev: F(1, 3) * ev.p**2 * ev.B(ev.p - 3),
        "(2 - C(2p,p))/(4p) = 1/3 p^2 B", guard=1)
    add("S3_T2", 5, 3, _H(-1), _rhs_h_minus_one,
        "sum_(0<d<p) (-1)^d/d = -2q + pq^2 - 2/3 p^2 q^3 - 1/4 p^2 B")
    add("S3_T3", 5, 3, lambda ev: ev.binom2p_sums[0],
        lambda ev: -F(8, 3) * ev.p**2 * ev.B(ev.p - 3),
        "sum_(0<d<p) (-1)^d/(p-d) C(2p,d) = -8/3 p^2 B")
    add("S3_T4", 5, 3, lambda ev: ev.binom2p_sums[1],
        lambda ev: 4 * ev.p * ev.q**2 + F(4, 3) * ev.p**2 * ev.B(ev.p - 3),
        "sum_(0<j<d<p) (-1)^d/(p-d) C(2p,j) = 4pq^2 + 4/3 p^2 B")
    add("S3_SPLIT", 3, 3, lambda ev: ev.power(4, ev.p - 1) * ev.central_binomial_sum,
        lambda ev: _s3_t1(ev) - ev.H((-1,), ev.p - 1) + ev.binom2p_sums[1]
        + F(1, 2) * ev.binom2p_sums[0],
        "4^(p-1) sum_(0<k<p) (-1)^k C(-1/2,k)/k = (2-C(2p,p))/(4p) - H(-1;p-1) "
        "+ sum_(0<j<d<p) (-1)^d C(2p,j)/(p-d) + 1/2 sum_(0<d<p) (-1)^d C(2p,d)/(p-d)",
        guard=1)
    add("S3_TOTAL", 5, 3, lambda ev: ev.power(4, ev.p - 1) * ev.central_binomial_sum,
        lambda ev: 2 * ev.q + 3 * ev.p * ev.q**2 + F(2, 3) * ev.p**2 * ev.q**3
        + F(7, 12) * ev.p**2 * ev.B(ev.p - 3),
        "4^(p-1) sum_(0<k<p) (-1)^k C(-1/2,k)/k = 2q + 3pq^2 + 2/3 p^2 q^3 + 7/12 p^2 B")
    add("S3_INV4", 3, 3, lambda ev: 1 / ev.power(4, ev.p - 1),
        lambda ev: 1 - 2 * ev.p * ev.q + 3 * ev.p**2 * ev.q**2,
        "4^(-(p-1)) = 1 - 2pq + 3p^2 q^2")

    for depth in (2, 3):
        for sig in product((1, -1, 2, -2), repeat=depth):
            rev, sign = reversal_pair(sig)
            s = Signature(sig)
            add(f"REV{depth}_{s.token}", 3, 1, _H(*sig),
                (lambda rev, sign: lambda ev: sign * ev.H(rev.entries, ev.p - 1))(rev, sign),
                f"H{s} = {sign:+d} H{rev} with bound p-1")

    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids)), "duplicate check id"
    return checks


REGISTRY: dict[str, CongruenceCheck] = {c.id: c for c in _build()}


def registry_list() -> list[CongruenceCheck]:
    return list(REGISTRY.values())


def get_check(check_id: str) -> CongruenceCheck:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None
