"""Evaluate registry checks at primes, on one or both backends."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Optional

from .backends import MAX_FAST_PRIME, make_backend
from .bernoulli import bernoulli_exact, bernoulli_mod_p
from .exact import rational_reduce_mod
from .modular import PrecisionError
from .primes import is_prime
from .registry import CongruenceCheck, get_check, registry_list

__all__ = [
    "CheckResult",
    "BackendMismatch",
    "run_check",
    "run_suite",
    "crosscheck_bernoulli",
    "iter_suite",
    "select_checks",
    "WORKERS_ENV",
]

WORKERS_ENV = "ALTMHS_WORKERS"
BACKENDS = ("exact", "fast", "both")


class BackendMismatch(Exception):
    pass


@dataclass
class CheckResult:
    prime: int
    check_id: str
    modulus: str
    lhs_residue: Optional[int]
    rhs_residue: Optional[int]
    passed: bool
    status: str                 # pass | fail | skipped | backend_mismatch | error
    elapsed_microseconds: int = 0
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def _evaluate(check: CongruenceCheck, p: int, backend: str, cache: dict) -> tuple[int, int]:
    k = check.modulus_exponent
    key = (backend, k + check.guard)
    ev = cache.get(key)
    if ev is None:
        ev = cache[key] = make_backend(backend, p, k + check.guard)
    lhs = ev.reduce(check.lhs(ev), k)
    rhs = ev.reduce(check.rhs(ev), k)
    return lhs.value, rhs.value


def run_check(check_id: str, p: int, backend: str = "fast", *, _cache: dict | None = None,
              _check: CongruenceCheck | None = None) -> CheckResult:
    """Evaluate one check at prime ``p``.

    ``backend="both"`` runs exact and fast and reports ``backend_mismatch``
    if their residues differ.
    """
    check = _check or get_check(check_id)
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not check.admissible(p):
        raise ValueError(f"{check.id} needs p >= {check.min_prime}, got {p}")
    if backend != "exact" and p >= MAX_FAST_PRIME:
        raise ValueError(f"p={p} exceeds the fast-backend bound {MAX_FAST_PRIME}")
    cache = {} if _cache is None else _cache
    modulus = f"{p}^{check.modulus_exponent}"
    start = time.perf_counter()
    try:
        if backend == "both":
            exact = _evaluate(check, p, "exact", cache)
            fast = _evaluate(check, p, "fast", cache)
            if exact != fast:
                elapsed = int((time.perf_counter() - start) * 1e6)
                return CheckResult(p, check.id, modulus, exact[0], exact[1], False,
                                   "backend_mismatch", elapsed,
                                   f"fast backend gave lhs={fast[0]} rhs={fast[1]}")
            lhs, rhs = exact
        else:
            lhs, rhs = _evaluate(check, p, backend, cache)
    except (PrecisionError, ArithmeticError, ValueError) as exc:
        elapsed = int((time.perf_counter() - start) * 1e6)
        return CheckResult(p, check.id, modulus, None, None, False, "error", elapsed,
                           f"{type(exc).__name__}: {exc}")
    elapsed = int((time.perf_counter() - start) * 1e6)
    ok = lhs == rhs
    return CheckResult(p, check.id, modulus, lhs, rhs, ok, "pass" if ok else "fail", elapsed)


def _skipped(p: int, check: CongruenceCheck) -> CheckResult:
    return CheckResult(p, check.id, f"{p}^{check.modulus_exponent}", None, None, False,
                       "skipped", 0, f"needs p >= {check.min_prime}")


def _run_prime(args) -> list[CheckResult]:
    p, ids, backend = args
    cache: dict = {}
    out = []
    for check in map(get_check, ids):
        if not check.admissible(p):
            out.append(_skipped(p, check))
        else:
            out.append(run_check(check.id, p, backend, _cache=cache, _check=check))
    return out


CROSSCHECK_LIMIT = 200
REFERENCE_PRIMES = (5, 7, 11, 13, 17, 19, 23)


def crosscheck_bernoulli(primes: Iterable[int], count: int = 3) -> None:
    """Compare the power-sum B_m mod p against the exact recurrence.

    Runs on the ``count`` smallest sweep primes below ``CROSSCHECK_LIMIT``
    (or a fixed reference set when the sweep has none); the fast backend is
    only trusted after this passes.
    """
    chosen = sorted(p for p in primes if 5 <= p <= CROSSCHECK_LIMIT)[:count]
    for p in chosen or REFERENCE_PRIMES:
        for m in range(2, p - 2, 2):
            if bernoulli_mod_p(m, p) != rational_reduce_mod(bernoulli_exact(m), p, 1):
                raise ArithmeticError(f"Bernoulli oracles disagree at m={m}, p={p}")


def prepare_suite(primes: list[int], backend: str) -> None:
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    if backend != "exact":
        crosscheck_bernoulli(primes)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def select_checks(ids="all") -> list[CongruenceCheck]:
    checks = registry_list() if ids == "all" else [get_check(i) for i in ids]
    return sorted(checks, key=lambda c: c.id)


def run_suite(primes: Iterable[int], ids="all", backend: str = "fast",
              workers: int | None = None) -> list[CheckResult]:
    """Run checks over primes; results ordered by (prime, check id).

    Inadmissible (prime, check) pairs come back with status ``skipped``.
    """
    primes = sorted(set(primes))
    checks = select_checks(ids)
    prepare_suite(primes, backend)
    workers = workers or default_workers()
    results = [r for chunk in iter_suite(primes, checks, backend, workers) for r in chunk]
    results.sort(key=lambda r: (r.prime, r.check_id))
    return results


def iter_suite(primes: list[int], checks: list[CongruenceCheck], backend: str,
               workers: int = 1) -> Iterator[list[CheckResult]]:
    """Yield one sorted block of results per prime, in increasing prime order."""
    ids = [c.id for c in checks]
    tasks = [(p, ids, backend) for p in sorted(primes)]
    if workers <= 1 or len(tasks) <= 1:
        yield from map(_run_prime, tasks)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run_prime, tasks)
