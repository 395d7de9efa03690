"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; ``pytest`` prints them in its summary and
``python tests/test_acceptance.py`` prints them directly.
"""
from __future__ import annotations

import json
import random
import sys
import time
from fractions import Fraction
from itertools import product

from click.testing import CliRunner

from altmhs import registry
from altmhs.bernoulli import bernoulli_exact, bernoulli_mod_p, fermat_quotient
from altmhs.cli import main
from altmhs.exact import binom_exact, rational_padic_valuation, rational_reduce_mod
from altmhs.identities import (alt_row_check, central_binomial_lhs, corollary32_check,
                               riordan_identity_check, theorem21_exact_check)
from altmhs.mhs import mhs_exact, mhs_mod, naive_mhs, reversal_pair, stuffle_product
from altmhs.primes import primes_between
from altmhs.runner import run_suite

RESULTS: list[str] = []


def record(num: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {num}. {name}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_central_binomial_sweep():
    primes = primes_between(5, 2000)
    start = time.perf_counter()
    results = run_suite(primes, ["T11_MAIN", "T11_HALF"], "fast", workers=1)
    elapsed = time.perf_counter() - start
    bad = [r for r in results if r.status != "pass"]
    ok = not bad and len(results) == 2 * len(primes) and elapsed < 120
    record(1, "T11_MAIN/T11_HALF mod p^3 for 5 <= p <= 2000", ok,
           f"{len(results)} results, {len(bad)} not passing, {elapsed:.2f}s single worker")


def test_criterion_2_full_registry_both_backends():
    primes = primes_between(2, 500)
    checks = registry.registry_list()
    start = time.perf_counter()
    results = run_suite(primes, "all", "both")
    elapsed = time.perf_counter() - start
    by_id = {c.id: c for c in checks}
    bad = [r for r in results if r.status not in ("pass", "skipped")]
    stray_skips = [r for r in results
                   if r.status == "skipped" and by_id[r.check_id].admissible(r.prime)]
    passed = sum(r.status == "pass" for r in results)
    record(2, "every admissible (check, prime <= 500) passes on both backends",
           not bad and not stray_skips and len(results) == len(primes) * len(checks),
           f"{passed} passed, {len(bad)} bad, {len(stray_skips)} unexplained skips, "
           f"{elapsed:.1f}s")


def test_criterion_3_golden_values():
    p = 5
    lhs = sum((Fraction(binom_exact(2 * k, k), k * 4**k) for k in range(1, p)), Fraction(0))
    rhs = -mhs_exact((1,), (p - 1) // 2)
    h = mhs_exact((-1, -2), 4)
    c = binom_exact(10, 5)
    l33 = Fraction(2) - Fraction(4, 3) * p**3 * bernoulli_exact(p - 3)
    checks = [
        lhs == Fraction(1321, 1536),
        rhs == Fraction(-3, 2),
        rational_padic_valuation(lhs - rhs, p) == 3,
        h == Fraction(-71, 288),
        rational_reduce_mod(h, p, 1).value == 3,
        rational_reduce_mod(Fraction(-3, 4) * bernoulli_exact(2), p, 1).value == 3,
        mhs_mod((-1, -2), 4, p, 1).value == 3,
        c == 252,
        rational_padic_valuation(c - l33, p) >= 4,
    ]
    record(3, "golden values at p = 5", all(checks),
           f"{sum(checks)}/{len(checks)} spot values reproduced")


def test_criterion_4_identity_sweeps():
    start = time.perf_counter()
    riordan = all(riordan_identity_check(n, d) for n in range(1, 26) for d in range(1, n + 1))
    cor = all(corollary32_check(n) for n in range(1, 31))
    row = all(alt_row_check(k) for k in range(1, 41))
    neg = all(theorem21_exact_check(a, n) for a in range(1, 5) for n in range(2, 41, 2))
    elapsed = time.perf_counter() - start
    record(4, "exact identity sweeps", riordan and cor and row and neg and elapsed < 60,
           f"riordan={riordan} central={cor} row={row} negative-index={neg}, {elapsed:.2f}s")


def test_criterion_5_oracle_equivalences():
    entries = (1, -1, 2, -2, 3, -3)
    sigs = [s for r in (1, 2, 3) for s in product(entries, repeat=r)]
    grid = all(mhs_exact(s, n) == naive_mhs(s, n) for s in sigs for n in range(26))
    faithful = True
    for p in primes_between(2, 50):
        for k in (1, 2, 3):
            for s in sigs:
                for n in sorted({p - 1, (p - 1) // 2}):
                    if mhs_mod(s, n, p, k) != rational_reduce_mod(mhs_exact(s, n), p, k):
                        faithful = False
    bern = all(bernoulli_mod_p(m, p) == rational_reduce_mod(bernoulli_exact(m), p, 1)
               for p in primes_between(5, 200) for m in range(2, p - 2, 2))
    record(5, "oracle equivalences", grid and faithful and bern,
           f"naive grid={grid} modular={faithful} bernoulli={bern}")


def test_criterion_6_property_suites():
    rng = random.Random(6)
    entries = (1, -1, 2, -2, 3, -3)

    def rand_sig():
        return tuple(rng.choice(entries) for _ in range(rng.randint(1, 2)))

    stuffle_fail = 0
    for _ in range(1000):
        s1, s2, n = rand_sig(), rand_sig(), rng.randint(0, 20)
        total = sum((mhs_exact(s.entries, n) for s in stuffle_product(s1, s2)), Fraction(0))
        stuffle_fail += mhs_exact(s1, n) * mhs_exact(s2, n) != total
    rev_fail = 0
    rev_cases = 0
    for p in primes_between(5, 101):
        for r in (2, 3):
            for sig in product((1, -1, 2, -2), repeat=r):
                rev, sign = reversal_pair(sig)
                rev_cases += 1
                rev_fail += mhs_mod(sig, p - 1, p, 1) != mhs_mod(rev.entries, p - 1, p, 1) * sign
    primes = primes_between(3, 500)
    fq_fail = 0
    fq_cases = 0
    while fq_cases < 500:
        p, x, y = rng.choice(primes), rng.randrange(1, 10**9), rng.randrange(1, 10**9)
        if x % p == 0 or y % p == 0:
            continue
        fq_cases += 1
        fq_fail += fermat_quotient(x * y, p, 1) != fermat_quotient(x, p, 1) + \
            fermat_quotient(y, p, 1)
    record(6, "stuffle, reversal and Fermat-quotient properties",
           stuffle_fail == rev_fail == fq_fail == 0,
           f"stuffle 1000 cases/{stuffle_fail} failed, reversal {rev_cases}/{rev_fail}, "
           f"fermat {fq_cases}/{fq_fail}")


def _verify(runner, *args):
    return runner.invoke(main, ["verify", *args])


def test_criterion_7_determinism_and_exit_codes():
    runner = CliRunner()
    base = ["--primes", "5..150", "--format", "json", "--no-timing"]
    reports = {w: _verify(runner, *base, "--workers", str(w)) for w in (1, 4, 8)}
    codes = {w: r.exit_code for w, r in reports.items()}
    texts = {r.stdout for r in reports.values()}
    deterministic = codes == {1: 0, 4: 0, 8: 0} and len(texts) == 1 and json.loads(texts.pop())

    real = registry.REGISTRY["T11_MAIN"]
    mutant = type(real)(real.id, real.min_prime, real.modulus_exponent, real.lhs,
                        lambda ev: real.rhs(ev) + 1, real.description)
    registry.REGISTRY["T11_MAIN"] = mutant
    try:
        mutant_code = _verify(runner, "--primes", "5..50", "--checks", "T11_MAIN").exit_code
    finally:
        registry.REGISTRY["T11_MAIN"] = real

    malformed = [["--primes", "5..x"], ["--primes", "5,15"], ["--checks", "T11_NOPE"],
                 ["--backend", "fastest"], ["--workers", "-3"], ["--format", "xml"]]
    usage_codes = [_verify(runner, *m).exit_code for m in malformed]
    ok = bool(deterministic) and mutant_code == 1 and set(usage_codes) == {2}
    record(7, "determinism across workers 1/4/8, mutant exit 1, malformed flags exit 2", ok,
           f"worker exits={codes} mutant exit={mutant_code} malformed exits={usage_codes}")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
