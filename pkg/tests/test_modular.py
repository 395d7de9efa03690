from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altmhs.exact import binom_exact, rational_padic_valuation, rational_reduce_mod
from altmhs.modular import (PadicScaled, PrecisionError, Residue, batch_inverses, binom_mod,
                            central_binomial_stream, mod_inverse, mod_pow, padic_arith)
from altmhs.primes import primes_between


def test_inverse_examples():
    assert mod_inverse(Residue(12, 5, 3)).value == 73
    assert mod_inverse(Residue(24, 5, 3)).value == 99
    with pytest.raises(ZeroDivisionError):
        mod_inverse(Residue(10, 5, 3))


def test_mod_pow_example():
    assert mod_pow(Residue(4, 5, 3), 4).value == 6
    assert mod_pow(Residue(4, 5, 3), 0).value == 1


@pytest.mark.parametrize("p,k", [(5, 3), (7, 2), (101, 4), (3, 1)])
def test_batch_inverses(p, k):
    invs = batch_inverses(p - 1, p, k)
    assert [(i * r.value) % p**k for i, r in enumerate(invs, 1)] == [1] * (p - 1)


def test_batch_inverses_needs_units():
    with pytest.raises(ValueError):
        batch_inverses(5, 5, 2)


def test_padic_arith_examples():
    a = PadicScaled.from_rational(Fraction(1321, 1536), 5, 4)
    b = PadicScaled.from_rational(Fraction(-3, 2), 5, 4)
    d = padic_arith("add", a, -b)
    assert d.valuation == 3 and d.to_residue(4) == rational_reduce_mod(Fraction(1321, 1536)
                                                                         + Fraction(3, 2), 5, 4)
    q = padic_arith("div", PadicScaled.from_rational(25, 5, 3), PadicScaled.from_rational(10, 5, 3))
    assert q.valuation == 1
    assert q.to_residue(3) == rational_reduce_mod(Fraction(5, 2), 5, 3)


def test_precision_is_tracked():
    one_digit = PadicScaled.from_residue(3, 5, 1)
    s = one_digit + PadicScaled.from_rational(1, 5, 3)
    assert s.absolute_precision == 1
    with pytest.raises(PrecisionError):
        s.to_residue(2)
    # scaling by p buys a digit of absolute precision
    assert (one_digit * 25).absolute_precision == 3
    assert (one_digit * 25).to_residue(3).value == 75


def test_cancellation_keeps_known_zero():
    a = PadicScaled.from_residue(7, 5, 2)
    z = a - a
    assert z.is_zero and z.absolute_precision == 2
    assert z.to_residue(2).value == 0


def test_division_by_zero_marker():
    with pytest.raises(ZeroDivisionError):
        PadicScaled.from_rational(1, 5, 2) / PadicScaled.zero(5)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_central_binomial_stream(p, k):
    for j, value in enumerate(central_binomial_stream(p, k), 1):
        c = binom_exact(2 * j, j)
        assert value.valuation == rational_padic_valuation(c, p)
        assert value.to_residue(k + value.valuation) == rational_reduce_mod(
            c, p, k + value.valuation)


def test_stream_matches_binom_mod():
    for p in primes_between(3, 100):
        for j, value in enumerate(central_binomial_stream(p, 2), 1):
            ref = binom_mod(2 * j, j, p, 2)
            assert value.valuation == ref.valuation
            assert value.to_residue(2 + value.valuation) == ref.to_residue(2 + ref.valuation)


def test_binom_mod_against_exact():
    for p in primes_between(2, 50):
        for k in range(1, 5):
            for n in range(0, 2 * p + 1):
                for r in range(0, n + 1):
                    c = binom_exact(n, r)
                    got = binom_mod(n, r, p, k)
                    assert got.valuation == rational_padic_valuation(c, p)
                    assert got.to_residue(k).value == c % p**k


units = st.integers(1, 10**6)


@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 4), st.integers(), st.integers(),
       st.integers())
def test_residue_ring_laws(p, k, a, b, c):
    x, y, z = Residue.of(a, p, k), Residue.of(b, p, k), Residue.of(c, p, k)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if a % p:
        assert x * x.inverse() == Residue.of(1, p, k)


@given(st.sampled_from([3, 5, 7]), st.fractions(max_denominator=10**4),
       st.fractions(max_denominator=10**4))
def test_padic_matches_exact(p, a, b):
    k = 3
    pa, pb = PadicScaled.from_rational(a, p, k), PadicScaled.from_rational(b, p, k)
    prod = padic_arith("mul", pa, pb)
    if a * b != 0:
        assert prod.valuation == rational_padic_valuation(a * b, p)
    if a * b != 0 and rational_padic_valuation(a * b, p) >= 0:
        assert prod.to_residue(k) == rational_reduce_mod(a * b, p, k)
