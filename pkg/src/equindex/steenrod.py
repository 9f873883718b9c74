"""Steenrod squares on F_2[u]/(u^t), the mod-2 cohomology of RP^(t-1).

On the generator's powers ``Sq^k(u^m) = C(m, k) u^(m+k)``; classes are
represented by their exponent, with ``None`` standing for zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .modp_arith import binom_mod_p


@dataclass(frozen=True)
class TruncatedPolyRing:
    truncation: int

    def __post_init__(self):
        if not isinstance(self.truncation, int) or self.truncation < 1:
            raise ParameterError(f"truncation must be >= 1, got {self.truncation!r}")

    def nonzero(self, m: int) -> bool:
        return 0 <= m < self.truncation

    @classmethod
    def projective_space(cls, dim: int) -> TruncatedPolyRing:
        """H*(RP^dim; F_2)."""
        return cls(dim + 1)


def _check(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 0:
            raise ParameterError(f"expected a non-negative integer, got {v!r}")


def sq(k: int, m: int, ring: TruncatedPolyRing) -> int | None:
    """Exponent of Sq^k(u^m) in ``ring``, or None when the square vanishes."""
    _check(k, m)
    if not ring.nonzero(m + k) or binom_mod_p(m, k, 2) == 0:
        return None
    return m + k


def total_square(m: int, ring: TruncatedPolyRing) -> list[tuple[int, int]]:
    """Nonzero terms (exponent, coefficient) of Sq(u^m) = sum_k Sq^k(u^m)."""
    _check(m)
    terms = []
    for k in range(m + 1):
        e = sq(k, m, ring)
        if e is not None:
            terms.append((e, 1))
    return terms


def _product(a: list[tuple[int, int]], b: list[tuple[int, int]], ring: TruncatedPolyRing) -> list[tuple[int, int]]:
    acc: dict[int, int] = {}
    for ea, ca in a:
        for eb, cb in b:
            if ring.nonzero(ea + eb):
                acc[ea + eb] = (acc.get(ea + eb, 0) + ca * cb) % 2
    return sorted((e, c) for e, c in acc.items() if c)


def cartan_check(m1: int, m2: int, ring: TruncatedPolyRing) -> bool:
    """Whether Sq(u^m1 u^m2) equals Sq(u^m1) Sq(u^m2) in ``ring``."""
    _check(m1, m2)
    lhs = total_square(m1 + m2, ring)
    rhs = _product(total_square(m1, ring), total_square(m2, ring), ring)
    return lhs == rhs


def format_class(exponent: int | None) -> str:
    return "0" if exponent is None else f"u^{exponent}"
