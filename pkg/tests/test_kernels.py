import pytest

from altmhs import _pykernels, kernels
from altmhs.primes import primes_between

try:
    from altmhs import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
PRIMES = primes_between(3, 400) + [65519, 65521]


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_modulus_envelope():
    with pytest.raises(OverflowError):
        kernels.power_sum(2, 10, 2**64)
    with pytest.raises(OverflowError):
        kernels.power_sum(2, 10, 1)


@needs_ext
@pytest.mark.parametrize("name,args", [
    ("batch_inverses", lambda p, M: (p - 1, M)),
    ("mhs_mod", lambda p, M: ((1, -2, 3), p - 1, M)),
    ("mhs_mod", lambda p, M: ((-1, -1), (p - 1) // 2, M)),
    ("twisted_power_sum", lambda p, M: (2, 3, p - 1, M)),
    ("power_sum", lambda p, M: (p - 3, p - 1, M)),
    ("central_binomial_sum", lambda p, M: (p, M)),
    ("binom2p_sums", lambda p, M: (p, M)),
    ("binom2p_expansion", lambda p, M: (p, M)),
])
def test_compiled_matches_python(name, args):
    for p in PRIMES:
        if p > 1000 and name in ("batch_inverses",):
            continue
        for k in (1, 3, 4):
            a = args(p, p**k)
            assert getattr(_ckernels, name)(*a) == getattr(_pykernels, name)(*a), (name, p, k)
