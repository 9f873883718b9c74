# cython: language_level=3
"""Compiled Lucas-binomial kernels.

Mirrors ``_kernels_py`` function for function; arguments are machine-width
integers (the dispatcher in ``_backend`` routes anything larger to Python).
"""


cdef inline long long _lucas(long long n, long long k, long long p) nogil:
    cdef long long result = 1
    cdef long long nd, kd, num, den, i
    if k < 0 or k > n:
        return 0
    while k > 0:
        nd = n % p
        kd = k % p
        if kd > nd:
            return 0
        # small binomial C(nd, kd) mod p, digits are < p
        if nd - kd < kd:
            kd = nd - kd
        num = 1
        den = 1
        for i in range(kd):
            num = (num * (nd - i)) % p
            den = (den * (i + 1)) % p
        result = (result * num) % p
        result = (result * _inverse(den, p)) % p
        n //= p
        k //= p
    return result


cdef inline long long _inverse(long long a, long long p) nogil:
    # Fermat inverse, p prime and a != 0 mod p
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def lucas_binom(long long n, long long k, long long p):
    return _lucas(n, k, p)


def first_nonzero_in_row(long long n, long long lo, long long hi, long long p):
    """Least j in [lo, hi] with C(n, j) != 0 mod p, or -1."""
    cdef long long j
    if lo < 0:
        lo = 0
    if p == 2:
        for j in range(lo, hi + 1):
            if j <= n and (j & n) == j:
                return j
        return -1
    for j in range(lo, hi + 1):
        if _lucas(n, j, p) != 0:
            return j
    return -1

