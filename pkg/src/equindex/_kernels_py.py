"""Pure-Python Lucas-binomial kernels, used when the compiled module is absent."""


def _small_binom(n: int, k: int, p: int) -> int:
    # n < p, so every factor of k! is invertible mod p
    num = den = 1
    for i in range(k):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


def lucas_binom(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    result = 1
    while k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        result = result * _small_binom(nd, min(kd, nd - kd), p) % p
        if not result:
            return 0
    return result


def first_nonzero_in_row(n: int, lo: int, hi: int, p: int) -> int:
    """Least j in [lo, hi] with C(n, j) != 0 mod p, or -1."""
    lo = max(lo, 0)
    if p == 2:
        for j in range(lo, min(hi, n) + 1):
            if j & n == j:
                return j
        return -1
    for j in range(lo, hi + 1):
        if lucas_binom(n, j, p):
            return j
    return -1

