import pytest

from altmhs.primes import is_prime, next_prime_above, primes_between
from altmhs.runner import crosscheck_bernoulli, run_suite


def test_primes():
    assert primes_between(1, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert next_prime_above(5) == 7
    assert is_prime(2**61 - 1) and not is_prime(3215031751)
    assert is_prime(18446744073709551557)
    with pytest.raises(ValueError):
        is_prime(318665857834031151167461)             # pseudoprime to every witness


def test_suite_order_and_workers():
    primes = [13, 5, 11, 7]
    ids = ["T11_MAIN", "C22_M1", "KNOWN_I_a1r1"]
    one = run_suite(primes, ids, workers=1)
    two = run_suite(primes, ids, workers=2)
    key = [(r.prime, r.check_id) for r in one]
    assert key == sorted(key)
    strip = lambda rs: [(r.prime, r.check_id, r.lhs_residue, r.rhs_residue, r.status) for r in rs]
    assert strip(one) == strip(two)


def test_crosscheck_large_primes_uses_reference_set():
    crosscheck_bernoulli([65521])
