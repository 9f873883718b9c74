"""Fadell-Husseini index ideals in H*(BC_p; F_p) and the rules for comparing them.

For p = 2 the ideals met here are principal, ``<u^N>``.  For odd p the ring
is F_p[y] (x) Lambda(eps) with |y| = 2, |eps| = 1; each graded piece is
one-dimensional, so an ideal is pinned down by the least power ``y^h`` and
the least ``eps*y^b`` it contains.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError, StructuralError
from .modp_arith import check_prime


def _inf(v: int | None) -> float:
    return math.inf if v is None else v


@dataclass(frozen=True)
class IndexIdeal:
    prime: int
    principal_exponent: int | None = None
    # odd p: least h with y^h in the ideal, least b with eps*y^b in it (None: not found below the cap)
    min_even_kernel: int | None = None
    min_odd_kernel: int | None = None

    def __post_init__(self):
        check_prime(self.prime)
        if self.prime == 2:
            if not isinstance(self.principal_exponent, int) or self.principal_exponent < 0:
                raise ParameterError("a mod-2 index ideal needs a non-negative principal exponent")
        elif self.principal_exponent is not None:
            raise ParameterError("odd-prime index ideals are described by kernel exponents")

    @classmethod
    def principal(cls, n: int) -> IndexIdeal:
        return cls(2, principal_exponent=n)

    @property
    def first_degree(self) -> float:
        """Least degree in which the ideal is nonzero (inf if none recorded)."""
        if self.prime == 2:
            return self.principal_exponent
        return min(2 * _inf(self.min_even_kernel), 2 * _inf(self.min_odd_kernel) + 1)

    @property
    def cindex(self) -> int | None:
        """Largest n with the ideal zero through degree n."""
        d = self.first_degree
        return None if d == math.inf else int(d) - 1

    def __str__(self) -> str:
        if self.prime == 2:
            return f"<u^{self.principal_exponent}>"
        parts = []
        if self.min_even_kernel is not None:
            parts.append(f"y^{self.min_even_kernel}")
        if self.min_odd_kernel is not None:
            parts.append(f"eps*y^{self.min_odd_kernel}")
        return "<" + ", ".join(parts) + ">" if parts else "<?>"


def _same_prime(a: IndexIdeal, b: IndexIdeal) -> None:
    if a.prime != b.prime:
        raise StructuralError(f"index ideals over different primes ({a.prime}, {b.prime})")


def contained_in(small: IndexIdeal, big: IndexIdeal) -> bool:
    _same_prime(small, big)
    if small.prime == 2:
        return small.principal_exponent >= big.principal_exponent
    return (_inf(small.min_even_kernel) >= _inf(big.min_even_kernel)
            and _inf(small.min_odd_kernel) >= _inf(big.min_odd_kernel))


def rule_out_map(source: IndexIdeal, target: IndexIdeal) -> bool:
    """True when monotonicity forbids an equivariant map source-space -> target-space.

    A map X -> Y forces Index(Y) to lie inside Index(X); this reports the
    failure of that containment.
    """
    return not contained_in(target, source)


def join_ideal(a: IndexIdeal, b: IndexIdeal) -> IndexIdeal:
    """Product ideal, a lower bound for the index of the join."""
    _same_prime(a, b)
    if a.prime == 2:
        return IndexIdeal.principal(a.principal_exponent + b.principal_exponent)
    ha, hb = _inf(a.min_even_kernel), _inf(b.min_even_kernel)
    oa, ob = _inf(a.min_odd_kernel), _inf(b.min_odd_kernel)
    # eps * y^(ha+hb) lies in the product too
    even, odd = ha + hb, min(oa + hb, ha + ob, ha + hb)
    return IndexIdeal(
        a.prime,
        min_even_kernel=None if even == math.inf else int(even),
        min_odd_kernel=None if odd == math.inf else int(odd),
    )
