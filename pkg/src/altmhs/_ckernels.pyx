# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contract as ``_pykernels``; moduli must be < 2**64."""
from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    """
    typedef unsigned __int128 altmhs_u128;
    static inline unsigned long long altmhs_mulmod(unsigned long long a,
                                                   unsigned long long b,
                                                   unsigned long long m) {
        return (unsigned long long)(((altmhs_u128)a * b) % m);
    }
    """
    u64 mulmod "altmhs_mulmod"(u64 a, u64 b, u64 m) nogil


cdef inline u64 addmod(u64 a, u64 b, u64 m) nogil:
    cdef u64 s = a + b
    if s >= m or s < a:
        s -= m
    return s


cdef inline u64 submod(u64 a, u64 b, u64 m) nogil:
    return a - b if a >= b else a + (m - b)


cdef inline u64 powmod(u64 a, u64 e, u64 m) nogil:
    cdef u64 r = 1 % m
    while e:
        if e & 1:
            r = mulmod(r, a, m)
        a = mulmod(a, a, m)
        e >>= 1
    return r


cdef u64* _inverses(long n, u64 M) except NULL:
    # prefix products, then one Python-level inversion of the full product
    cdef u64* out = <u64*> malloc((n + 1) * sizeof(u64))
    if out == NULL:
        raise MemoryError()
    cdef long i
    out[0] = 1 % M
    for i in range(1, n + 1):
        out[i] = mulmod(out[i - 1], <u64> i, M)
    cdef u64 inv
    try:
        inv = <u64> pow(int(out[n]), -1, int(M))
    except ValueError:
        free(out)
        raise
    cdef u64 prev
    for i in range(n, 0, -1):
        prev = out[i - 1]
        out[i] = mulmod(inv, prev, M)
        inv = mulmod(inv, <u64> i, M)
    return out      # out[i] = 1/i for i >= 1


def batch_inverses(long n, u64 M):
    if n <= 0:
        return []
    cdef u64* inv = _inverses(n, M)
    try:
        return [inv[i] for i in range(1, n + 1)]
    finally:
        free(inv)


def mhs_mod(entries, long n, u64 M):
    cdef long r = len(entries)
    if n < r:
        return 0
    cdef u64* inv = _inverses(n, M)
    cdef u64* acc = <u64*> malloc((r + 1) * sizeof(u64))
    cdef int* w = <int*> malloc(r * sizeof(int))
    cdef int* neg = <int*> malloc(r * sizeof(int))
    cdef long i, m, lo, hi
    cdef u64 t, im
    try:
        for i in range(r):
            w[i] = abs(entries[i])
            neg[i] = entries[i] < 0
            acc[i + 1] = 0
        acc[0] = 1 % M
        with nogil:
            for m in range(1, n + 1):
                im = inv[m]
                lo = r - (n - m)
                if lo < 1:
                    lo = 1
                hi = m if m < r else r
                i = hi
                while i >= lo:
                    if acc[i - 1]:
                        t = mulmod(acc[i - 1], powmod(im, w[i - 1], M), M)
                        if neg[i - 1] and (m & 1):
                            acc[i] = submod(acc[i], t, M)
                        else:
                            acc[i] = addmod(acc[i], t, M)
                    i -= 1
        return acc[r]
    finally:
        free(inv)
        free(acc)
        free(w)
        free(neg)


def twisted_power_sum(x, long r, long n, u64 M):
    cdef u64 xm = <u64> (x % M)
    cdef u64* inv = _inverses(n, M)
    cdef u64 xp = 1 % M, s = 0
    cdef long k
    try:
        with nogil:
            for k in range(1, n + 1):
                xp = mulmod(xp, xm, M)
                s = addmod(s, mulmod(xp, powmod(inv[k], r, M), M), M)
        return s
    finally:
        free(inv)


def power_sum(long m, long n, u64 M):
    cdef u64 s = 0
    cdef long k
    with nogil:
        for k in range(1, n + 1):
            s = addmod(s, powmod(<u64> k % M, m, M), M)
    return s


def central_binomial_sum(long p, u64 M):
    cdef u64* inv = _inverses(p - 1, M)
    cdef u64 inv4 = <u64> pow(4, -1, int(M))
    cdef u64 c = 1 % M, s = 0, w = 1 % M
    cdef long k
    try:
        with nogil:
            for k in range(1, p):
                c = mulmod(mulmod(c, <u64> (2 * (2 * k - 1)) % M, M), inv[k], M)
                w = mulmod(w, inv4, M)
                s = addmod(s, mulmod(mulmod(c, inv[k], M), w, M), M)
        return s
    finally:
        free(inv)


def binom2p_sums(long p, u64 M):
    cdef u64* inv = _inverses(p - 1, M)
    cdef u64 single = 0, double = 0, c = 1 % M, prefix = 0, t
    cdef long d
    try:
        with nogil:
            for d in range(1, p):
                c = mulmod(mulmod(c, <u64> (2 * p - d + 1) % M, M), inv[d], M)
                if d & 1:
                    single = submod(single, mulmod(c, inv[p - d], M), M)
                    double = submod(double, mulmod(prefix, inv[p - d], M), M)
                else:
                    single = addmod(single, mulmod(c, inv[p - d], M), M)
                    double = addmod(double, mulmod(prefix, inv[p - d], M), M)
                prefix = addmod(prefix, c, M)
        return single, double
    finally:
        free(inv)


def binom2p_expansion(long p, u64 M):
    cdef u64* inv = _inverses(p - 1, M)
    cdef u64 c = 1 % M, h = 0, lhs = 0, rhs = 0
    cdef u64 two_p = <u64> (2 * p) % M
    cdef u64 four_pp = mulmod(<u64> (4 * p) % M, <u64> p % M, M)
    cdef long j = 0
    try:
        for j in range(1, p):
            c = mulmod(mulmod(c, <u64> (2 * p - j + 1) % M, M), inv[j], M)
            rhs = mulmod(submod(mulmod(four_pp, h, M), two_p, M), inv[j], M)
            if j & 1:
                rhs = submod(0, rhs, M)
            lhs = c
            if lhs != rhs:
                return j, lhs, rhs
            h = addmod(h, inv[j], M)
        return j, lhs, rhs
    finally:
        free(inv)
