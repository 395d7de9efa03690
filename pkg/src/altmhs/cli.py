"""Command-line front end.

Exit codes: 0 all checks passed, 1 a failure / backend mismatch / error,
2 a usage or configuration problem.
"""
from __future__ import annotations

import csv
import json
import sys
from dataclasses import dataclass
from typing import Optional

import click

from . import kernels
from .backends import MAX_FAST_PRIME
from .bernoulli import DEFAULT_CAP, bernoulli_exact
from .exact import rational_padic_valuation, rational_reduce_mod
from .identities import (alt_row_check, corollary32_check, riordan_identity_check,
                         theorem21_exact_check)
from .mhs import Signature, mhs_exact, mhs_mod
from .primes import is_prime, primes_between
from .registry import REGISTRY, registry_list
from .runner import WORKERS_ENV, CheckResult, iter_suite, prepare_suite, select_checks

FIELDS = ("prime", "check", "modulus", "lhs", "rhs", "status", "elapsed_us")
MIN_PRIME = 5


@dataclass
class RunConfig:
    primes: list[int]
    check_ids: object          # "all" or list of ids
    backend: str
    workers: int
    output_format: str
    output_path: Optional[str]
    timing: bool = True


class UsageError(click.UsageError):
    pass


def parse_primes(spec: str, allow_small: bool) -> tuple[list[int], bool]:
    """``"5..500"`` (a range) or ``"5,7,11"`` (an explicit list).

    Returns the primes and whether the input was a range.  Composites in an
    explicit list are an error; ranges are filtered to primes.
    """
    spec = spec.strip()
    try:
        if ".." in spec:
            lo, hi = (int(x) for x in spec.split("..", 1))
            if not allow_small:
                lo = max(lo, MIN_PRIME)
            return primes_between(lo, hi), True
        values = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse prime specification {spec!r}") from None
    bad = [n for n in values if not is_prime(n)]
    if bad:
        raise UsageError(f"not prime: {', '.join(map(str, bad))}")
    small = [n for n in values if n < MIN_PRIME]
    if small and not allow_small:
        raise UsageError(f"primes below {MIN_PRIME} need --allow-small-primes: {small}")
    return sorted(set(values)), False


def _row(r: CheckResult, timing: bool) -> dict:
    row = {
        "prime": r.prime,
        "check": r.check_id,
        "modulus": r.modulus,
        "lhs": None if r.lhs_residue is None else str(r.lhs_residue),
        "rhs": None if r.rhs_residue is None else str(r.rhs_residue),
        "status": r.status,
    }
    if timing:
        row["elapsed_us"] = r.elapsed_microseconds
    return row


def _open_output(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", encoding="utf-8", newline=""), True
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_verify(config: RunConfig) -> int:
    checks = select_checks(config.check_ids)
    if not config.primes:
        click.echo("warning: no primes in range", err=True)
    try:
        prepare_suite(config.primes, config.backend)
    except ArithmeticError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    out, close = _open_output(config.output_path)
    counts: dict[str, int] = {}
    fields = FIELDS if config.timing else FIELDS[:-1]
    try:
        writer = None
        if config.output_format == "csv":
            writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
        rows = []
        for block in iter_suite(config.primes, checks, config.backend, config.workers):
            for r in block:
                counts[r.status] = counts.get(r.status, 0) + 1
                row = _row(r, config.timing)
                if config.output_format == "csv":
                    writer.writerow({k: "" if v is None else v for k, v in row.items()})
                elif config.output_format == "text":
                    line = (f"p={r.prime:<6} {r.check_id:<16} mod {r.modulus:<9} "
                            f"lhs={row['lhs']} rhs={row['rhs']} {r.status.upper()}")
                    if r.detail and r.status != "skipped":
                        line += f"  [{r.detail}]"
                    out.write(line + "\n")
                else:
                    rows.append(row)
            out.flush()
        if config.output_format == "json":
            out.write(json.dumps(rows, indent=1) + "\n")
    finally:
        if close:
            out.close()
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items())) or "nothing to run"
    click.echo(f"{len(config.primes)} primes, {len(checks)} checks: {summary} "
               f"[kernels: {kernels.BACKEND}]", err=True)
    bad = sum(counts.get(s, 0) for s in ("fail", "backend_mismatch", "error"))
    return 1 if bad else 0


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Alternating multiple harmonic sums and congruence verification."""


@main.command()
@click.option("--primes", "primes_spec", default="5..200", show_default=True,
              help="Range LO..HI or comma-separated list of primes.")
@click.option("--checks", "checks_spec", default="all", show_default=True,
              help="'all' or comma-separated check ids (see list-checks).")
@click.option("--backend", type=click.Choice(["exact", "fast", "both"]), default="fast",
              show_default=True)
@click.option("--workers", type=click.IntRange(min=1), envvar=WORKERS_ENV, default=1,
              show_default=True, help=f"Worker processes (env {WORKERS_ENV}).")
@click.option("--format", "output_format", type=click.Choice(["json", "csv", "text"]),
              default="text", show_default=True)
@click.option("--output", "output_path", default=None, help="Report file (default stdout).")
@click.option("--no-timing", is_flag=True, help="Omit elapsed_us for reproducible reports.")
@click.option("--allow-small-primes", is_flag=True, help=f"Permit primes below {MIN_PRIME}.")
def verify(primes_spec, checks_spec, backend, workers, output_format, output_path,
           no_timing, allow_small_primes):
    """Check registry congruences over a set of primes."""
    primes, _ = parse_primes(primes_spec, allow_small_primes)
    if checks_spec.strip() == "all":
        ids = "all"
    else:
        ids = [c.strip() for c in checks_spec.split(",") if c.strip()]
        unknown = [c for c in ids if c not in REGISTRY]
        if unknown or not ids:
            raise UsageError(f"unknown check id(s): {', '.join(unknown) or '(none given)'}")
    if backend != "exact" and primes and primes[-1] >= MAX_FAST_PRIME:
        raise UsageError(f"p={primes[-1]} exceeds the 64-bit envelope of the fast backend "
                         f"(p < {MAX_FAST_PRIME}); use --backend exact")
    config = RunConfig(primes, ids, backend, workers, output_format, output_path, not no_timing)
    sys.exit(cmd_verify(config))


def _parse_modulus(text: str) -> tuple[int, int]:
    try:
        if "^" in text:
            p, k = (int(x) for x in text.split("^", 1))
        else:
            p, k = int(text), 1
    except ValueError:
        raise UsageError(f"modulus must look like P^K, got {text!r}") from None
    if not is_prime(p) or k < 1:
        raise UsageError(f"modulus must be a prime power P^K with K >= 1, got {text!r}")
    return p, k


@main.command()
@click.option("--sig", "sig_text", required=True, help="Signature, e.g. -1,-2")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Upper bound n.")
@click.option("--mod", "modulus", default=None, help="Also reduce modulo P^K.")
def mhs(sig_text, n, modulus):
    """Evaluate H(sig; n) exactly, and modulo P^K when asked."""
    try:
        sig = Signature.parse(sig_text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    click.echo(str(mhs_exact(sig, n)))
    if modulus is not None:
        p, k = _parse_modulus(modulus)
        if n >= p:
            raise UsageError(f"n={n} must be below p={p} to reduce modulo {p}^{k}")
        click.echo(str(mhs_mod(sig, n, p, k).value))


@main.command()
@click.option("--nmax", type=click.IntRange(min=1), default=25, show_default=True)
def identities(nmax):
    """Verify the exact binomial and harmonic-sum identities up to NMAX."""
    failures = 0
    total = 0

    def record(name, ok):
        nonlocal failures, total
        total += 1
        if not ok:
            failures += 1
            click.echo(f"FAIL {name}")

    for n in range(1, nmax + 1):
        for d in range(1, n + 1):
            record(f"riordan(n={n}, d={d})", riordan_identity_check(n, d))
        record(f"central-binomial(n={n})", corollary32_check(n))
        record(f"alternating-row(k={n})", alt_row_check(n))
    for a in range(1, 5):
        for n in range(2, 2 * (nmax // 2) + 1, 2):
            record(f"negative-index(a={a}, n={n})", theorem21_exact_check(a, n))
    click.echo(f"{total} identities checked, {failures} failed")
    sys.exit(1 if failures else 0)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=0, max=DEFAULT_CAP), required=True)
@click.option("--p", "p", type=int, default=None, help="Also print B_n mod p.")
def bernoulli(n, p):
    """Print the Bernoulli number B_n (B_1 = -1/2), and B_n mod p."""
    b = bernoulli_exact(n)
    click.echo(str(b))
    if p is not None:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        if b.denominator % p == 0:
            click.echo(f"not {p}-integral (v_{p} = {rational_padic_valuation(b, p)})")
        else:
            click.echo(str(rational_reduce_mod(b, p, 1).value))


@main.command("list-checks")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
def list_checks(output_format):
    """List every registered congruence."""
    checks = registry_list()
    if output_format == "json":
        click.echo(json.dumps([
            {"id": c.id, "min_prime": c.min_prime, "modulus": f"p^{c.modulus_exponent}",
             "description": c.description} for c in checks], indent=1))
        return
    for c in checks:
        click.echo(f"{c.id:<16} p>={c.min_prime:<3} mod p^{c.modulus_exponent}  {c.description}")


if __name__ == "__main__":
    main()
