from fractions import Fraction

import pytest

from altmhs.exact import RationalPoly
from altmhs.identities import (alt_row_check, central_binomial_lhs, corollary32_check,
                               corollary32_rhs, riordan_identity_check, riordan_sides,
                               theorem21_exact_check, v_sequence)


def test_v_sequence():
    assert v_sequence(4, 10).terms == (2,) * 11
    assert v_sequence(2, 4).terms == (2, 0, -2, 0, 2)
    x = RationalPoly.x()
    assert v_sequence(x, 2).terms[2] == x * x - 4 * x + 2
    with pytest.raises(ValueError):
        v_sequence(1, -1)


def test_riordan_examples():
    lhs, rhs = riordan_sides(2, 1)
    assert lhs == rhs == RationalPoly.x() + 2
    assert riordan_identity_check(1, 1)
    with pytest.raises(ValueError):
        riordan_sides(2, 3)


def test_riordan_sweep():
    assert all(riordan_identity_check(n, d) for n in range(1, 26) for d in range(1, n + 1))


def test_corollary32():
    assert central_binomial_lhs(1) == corollary32_rhs(1) == 2
    assert all(corollary32_check(n) for n in range(1, 31))


def test_riordan_at_four_gives_corollary32():
    # at x = 4 every v_k is 2; weighting the d-th identity by -2(-1)^d/d and summing
    # over d turns the left sides into the central binomial sum
    for n in range(1, 26):
        via_lhs = Fraction(0)
        via_rhs = Fraction(0)
        for d in range(1, n + 1):
            lhs, rhs = riordan_sides(n, d, Fraction(4))
            w = Fraction(-2 * (-1) ** d, d)
            via_lhs += w * lhs
            via_rhs += w * rhs
        assert via_lhs == central_binomial_lhs(n)
        assert via_rhs == corollary32_rhs(n)


def test_alt_row():
    assert alt_row_check(1) and alt_row_check(2)
    assert all(alt_row_check(k) for k in range(1, 41))


def test_negative_index_equalities():
    assert theorem21_exact_check(1, 4)
    assert theorem21_exact_check(2, 2)
    assert all(theorem21_exact_check(a, n) for a in range(1, 5) for n in range(2, 41, 2))
    with pytest.raises(ValueError):
        theorem21_exact_check(1, 3)
