"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernels.py [--primes 1009,7919,65521] [--repeat 3]
"""
import argparse
import timeit

from altmhs import _pykernels

try:
    from altmhs import _ckernels
except ImportError:
    _ckernels = None

CASES = {
    "mhs_mod (1,-2,3)": lambda k, p: k.mhs_mod((1, -2, 3), p - 1, p**3),
    "mhs_mod (1,)": lambda k, p: k.mhs_mod((1,), p - 1, p**3),
    "twisted_power_sum": lambda k, p: k.twisted_power_sum(2, 3, p - 1, p**3),
    "power_sum": lambda k, p: k.power_sum(p - 3, p - 1, p**2),
    "central_binomial_sum": lambda k, p: k.central_binomial_sum(p, p**3),
    "binom2p_sums": lambda k, p: k.binom2p_sums(p, p**3),
    "binom2p_expansion": lambda k, p: k.binom2p_expansion(p, p**3),
}


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default="1009,7919,65521")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    primes = [int(x) for x in args.primes.split(",")]
    if _ckernels is None:
        print("compiled kernels are not built; showing pure-Python timings only")
    print(f"{'kernel':<22} {'p':>6} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, case in CASES.items():
        for p in primes:
            t_py = best(lambda: case(_pykernels, p), args.repeat)
            if _ckernels is None:
                print(f"{name:<22} {p:>6} {t_py * 1e3:>10.2f}")
                continue
            if case(_ckernels, p) != case(_pykernels, p):
                raise SystemExit(f"kernel outputs differ: {name} at p={p}")
            t_c = best(lambda: case(_ckernels, p), args.repeat)
            print(f"{name:<22} {p:>6} {t_py * 1e3:>10.2f} {t_c * 1e3:>10.3f} "
                  f"{t_py / t_c:>7.0f}x")


if __name__ == "__main__":
    main()
