"""Independent reference computations, deliberately naive."""
from math import comb

import sympy as sp


def binom_mod(n, k, p):
    return comb(n, k) % p if 0 <= k <= n else 0


def digits_by_string(n, p):
    # base conversion via sympy's digits, least significant first
    if n == 0:
        return []
    return list(reversed(sp.ntheory.digits(n, p)[1:]))


def truncation_exponent(l, k):
    return min(j for j in range(l - k + 1, l + 1) if comb(l, j) % 2)


def total_square_by_expansion(m, t):
    """Sq(u^m) = (u + u^2)^m in F_2[u]/(u^t), as sorted exponent list."""
    u = sp.symbols("u")
    poly = sp.Poly(sp.expand((u + u**2) ** m), u, modulus=2)
    return sorted(e for (e,), c in poly.terms() if c % 2 and e < t)


def tower_groebner(k, p):
    zs = sp.symbols(f"z0:{k + 1}")
    rels = [zs[0] ** 2] + [zs[i] ** 2 + zs[i - 1] * zs[i] for i in range(1, k + 1)]
    return zs, sp.groebner(rels, *zs[::-1], modulus=p, order="lex")


def tower_reduce(k, p, exponents):
    """Normal form of prod z_i^exponents[i] as {exponent tuple: coeff mod p}."""
    zs, G = tower_groebner(k, p)
    expr = sp.Mul(*[z**e for z, e in zip(zs, exponents)])
    rem = G.reduce(expr)[1]
    if rem == 0:
        return {}
    poly = sp.Poly(rem, *zs)
    return {mono: int(c) % p for mono, c in poly.terms() if int(c) % p}


def tower_height(k, p):
    zs, G = tower_groebner(k, p)
    n = 1
    while G.reduce(zs[k] ** n)[1] != 0:
        n += 1
    return n
