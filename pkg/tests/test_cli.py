import json

import pytest
from click.testing import CliRunner

from altmhs import registry
from altmhs.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_mhs_command(runner):
    r = runner.invoke(main, ["mhs", "--sig", "-1,-2", "--n", "4", "--mod", "5^1"])
    assert r.exit_code == 0
    assert r.output.split() == ["-71/288", "3"]


def test_bernoulli_command(runner):
    r = runner.invoke(main, ["bernoulli", "--n", "4", "--p", "7"])
    assert r.exit_code == 0 and r.output.split() == ["-1/30", "3"]


def test_identities_command(runner):
    r = runner.invoke(main, ["identities", "--nmax", "6"])
    assert r.exit_code == 0 and "0 failed" in r.output


def test_list_checks(runner):
    r = runner.invoke(main, ["list-checks", "--format", "json"])
    assert r.exit_code == 0
    assert {c["id"] for c in json.loads(r.output)} == set(registry.REGISTRY)


def test_verify_json(runner):
    r = runner.invoke(main, ["verify", "--primes", "5..13", "--checks", "T11_MAIN,L33_P",
                             "--format", "json", "--no-timing"])
    assert r.exit_code == 0, r.output
    rows = json.loads(r.stdout)
    assert len(rows) == 8
    assert set(rows[0]) == {"prime", "check", "modulus", "lhs", "rhs", "status"}
    assert all(row["status"] == "pass" for row in rows)


def test_verify_csv_to_file(runner, tmp_path):
    out = tmp_path / "r.csv"
    r = runner.invoke(main, ["verify", "--primes", "5,7", "--checks", "C24_M1M2",
                             "--format", "csv", "--output", str(out)])
    assert r.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "prime,check,modulus,lhs,rhs,status,elapsed_us"
    assert lines[1].startswith("5,C24_M1M2,5^1,3,3,pass,")


@pytest.mark.parametrize("args", [
    ["verify", "--primes", "5,9"],
    ["verify", "--primes", "3"],
    ["verify", "--primes", "five"],
    ["verify", "--checks", "NOPE"],
    ["verify", "--backend", "quantum"],
    ["verify", "--workers", "0"],
    ["verify", "--primes", "65537", "--checks", "T11_MAIN"],
    ["verify", "--primes", "5", "--output", "/nonexistent/dir/x.json"],
    ["mhs", "--sig", "1,0", "--n", "3"],
    ["mhs", "--sig", "1", "--n", "7", "--mod", "5^2"],
    ["bernoulli", "--n", "4", "--p", "8"],
])
def test_usage_errors_exit_2(runner, args):
    assert runner.invoke(main, args).exit_code == 2


def test_small_primes_flag(runner):
    r = runner.invoke(main, ["verify", "--primes", "3", "--checks", "T11_MAIN",
                             "--allow-small-primes", "--format", "json", "--no-timing"])
    assert r.exit_code == 0
    assert json.loads(r.stdout)[0]["status"] == "skipped"


def test_mutant_check_exit_1(runner, monkeypatch):
    real = registry.REGISTRY["T11_MAIN"]
    mutant = type(real)(real.id, real.min_prime, real.modulus_exponent, real.lhs,
                        lambda ev: real.rhs(ev) + 1, real.description)
    monkeypatch.setitem(registry.REGISTRY, "T11_MAIN", mutant)
    r = runner.invoke(main, ["verify", "--primes", "5..30", "--checks", "T11_MAIN"])
    assert r.exit_code == 1
    assert "FAIL" in r.output
