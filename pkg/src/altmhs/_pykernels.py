"""Pure-Python kernels. Same contract as the compiled ``_ckernels`` module.

Every function works with plain ints modulo ``M``; callers guarantee that all
divisors used (1..n, or 1..p-1) are units mod M.
"""


def batch_inverses(n, M):
    """Inverses of 1..n mod M via prefix products."""
    if n <= 0:
        return []
    prefix = [1] * (n + 1)
    for i in range(1, n + 1):
        prefix[i] = prefix[i - 1] * i % M
    inv = pow(prefix[n], -1, M)
    out = [0] * n
    for i in range(n, 0, -1):
        out[i - 1] = inv * prefix[i - 1] % M
        inv = inv * i % M
    return out


def mhs_mod(entries, n, M):
    """H(entries; n) mod M by the streaming depth recurrence."""
    r = len(entries)
    if n < r:
        return 0
    inv = batch_inverses(n, M)
    weights = [abs(a) for a in entries]
    negative = [a < 0 for a in entries]
    acc = [1] + [0] * r
    for m in range(1, n + 1):
        im = inv[m - 1]
        odd = m & 1
        lo = max(1, r - (n - m))
        hi = min(r, m)
        for i in range(hi, lo - 1, -1):
            prev = acc[i - 1]
            if not prev:
                continue
            t = prev * pow(im, weights[i - 1], M) % M
            if negative[i - 1] and odd:
                acc[i] -= t
            else:
                acc[i] += t
            acc[i] %= M
    return acc[r] % M


def twisted_power_sum(x, r, n, M):
    """sum_{k=1}^{n} x^k / k^r mod M."""
    inv = batch_inverses(n, M)
    xp = 1
    s = 0
    x %= M
    for k in range(1, n + 1):
        xp = xp * x % M
        s += xp * pow(inv[k - 1], r, M)
    return s % M


def power_sum(m, n, M):
    """sum_{k=1}^{n} k^m mod M."""
    s = 0
    for k in range(1, n + 1):
        s += pow(k, m, M)
    return s % M


def central_binomial_sum(p, M):
    """sum_{k=1}^{p-1} C(2k,k) / (k 4^k) mod M."""
    inv = batch_inverses(p - 1, M)
    inv4 = pow(4, -1, M)
    c = 1
    s = 0
    w = 1
    for k in range(1, p):
        ik = inv[k - 1]
        c = c * (2 * (2 * k - 1)) % M * ik % M
        w = w * inv4 % M
        s += c * ik % M * w
    return s % M


def binom2p_sums(p, M):
    """Return (sum_{0<d<p} (-1)^d C(2p,d)/(p-d), sum_{0<j<d<p} (-1)^d C(2p,j)/(p-d)) mod M."""
    inv = batch_inverses(p - 1, M)
    single = 0
    double = 0
    c = 1            # C(2p, d)
    prefix = 0       # sum_{0<j<d} C(2p, j)
    for d in range(1, p):
        c = c * (2 * p - d + 1) % M * inv[d - 1] % M
        t_inv = inv[p - d - 1]
        if d & 1:
            single -= c * t_inv
            double -= prefix * t_inv
        else:
            single += c * t_inv
            double += prefix * t_inv
        prefix = (prefix + c) % M
    return single % M, double % M


def binom2p_expansion(p, M):
    """Compare C(2p,j) with -2p(-1)^j/j + 4p^2(-1)^j H(1;j-1)/j mod M for 0<j<p.

    Returns (j, lhs, rhs) for the first j that disagrees, or for j = p-1.
    """
    inv = batch_inverses(p - 1, M)
    c = 1
    h = 0            # H(1; j-1)
    j, lhs, rhs = 0, 0, 0
    for j in range(1, p):
        ij = inv[j - 1]
        c = c * (2 * p - j + 1) % M * ij % M
        rhs = (-2 * p + 4 * p * p * h) % M * ij % M
        if j & 1:
            rhs = (-rhs) % M
        lhs = c
        if lhs != rhs:
            return j, lhs, rhs
        h = (h + ij) % M
    return j, lhs, rhs
