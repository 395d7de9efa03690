"""Kernel selection: the compiled extension when it imports, else pure Python.

Set ``ALTMHS_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the one
in use.
"""
import os

from . import _pykernels as pure

MAX_MODULUS = 2**64

if os.environ.get("ALTMHS_PURE_PYTHON", "") not in ("", "0"):
    _impl = pure
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = pure
        BACKEND = "python"

compiled = _impl if BACKEND == "cython" else None


def _checked(M):
    if not 1 < M < MAX_MODULUS:
        raise OverflowError(f"modulus {M} outside the 64-bit kernel envelope")
    return M


def batch_inverses(n, M):
    return _impl.batch_inverses(n, _checked(M))


def mhs_mod(entries, n, M):
    return _impl.mhs_mod(list(entries), n, _checked(M))


def twisted_power_sum(x, r, n, M):
    return _impl.twisted_power_sum(x, r, n, _checked(M))


def power_sum(m, n, M):
    return _impl.power_sum(m, n, _checked(M))


def central_binomial_sum(p, M):
    return _impl.central_binomial_sum(p, _checked(M))


def binom2p_sums(p, M):
    return _impl.binom2p_sums(p, _checked(M))


def binom2p_expansion(p, M):
    return _impl.binom2p_expansion(p, _checked(M))
