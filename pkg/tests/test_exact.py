from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altmhs.exact import (RationalPoly, binom_exact, int_valuation, rational_padic_valuation,
                          rational_reduce_mod)
from altmhs.modular import Residue

PRIMES = [2, 3, 5, 7, 11, 13]
nonzero_fracs = st.fractions().filter(lambda f: f != 0)


def test_binom_exact_values():
    assert binom_exact(10, 5) == 252
    assert binom_exact(0, 0) == 1
    assert binom_exact(5, -1) == 0
    assert binom_exact(5, 6) == 0


def test_valuation_examples():
    assert int_valuation(250, 5) == 3
    assert rational_padic_valuation(Fraction(2500, 9), 5) == 4
    assert rational_padic_valuation(Fraction(7, 50), 5) == -2
    with pytest.raises(ValueError):
        rational_padic_valuation(0, 5)


def test_reduce_examples():
    assert rational_reduce_mod(Fraction(-7, 12), 5, 3) == Residue(114, 5, 3)
    assert rational_reduce_mod(Fraction(-71, 288), 5, 1).value == 3
    assert rational_reduce_mod(Fraction(3, 2), 5, 3).value == 64


def test_reduce_rejects_bad_input():
    with pytest.raises(ValueError):
        rational_reduce_mod(Fraction(1, 10), 5, 2)
    with pytest.raises(TypeError):
        rational_reduce_mod(0.5, 5, 2)


@given(st.fractions(), st.fractions(), st.sampled_from(PRIMES), st.integers(1, 4))
def test_reduction_is_a_ring_homomorphism(a, b, p, k):
    if a.denominator % p == 0 or b.denominator % p == 0:
        return
    ra, rb = rational_reduce_mod(a, p, k), rational_reduce_mod(b, p, k)
    assert rational_reduce_mod(a + b, p, k) == ra + rb
    assert rational_reduce_mod(a * b, p, k) == ra * rb


@given(nonzero_fracs, nonzero_fracs, st.sampled_from(PRIMES))
def test_valuation_is_additive(a, b, p):
    assert rational_padic_valuation(a * b, p) == (
        rational_padic_valuation(a, p) + rational_padic_valuation(b, p))


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_fraction_canonical_form(n, d):
    f = Fraction(n, d)
    assert f.denominator > 0
    from math import gcd
    assert gcd(f.numerator, f.denominator) == 1


def test_poly_arithmetic():
    x = RationalPoly.x()
    p = (x + 1) * (x - 1)
    assert p == x * x - 1
    assert p.degree == 2
    assert p(3) == 8
    assert (p - p).degree == -1 or (p - p) == RationalPoly.const(0)
    assert RationalPoly.monomial_sum([(2, 1), (0, -1)]) == p
    assert (x * Fraction(1, 2))(Fraction(4)) == 2
