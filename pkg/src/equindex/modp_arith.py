"""Binomial coefficients modulo a prime via base-p digits (Lucas' theorem)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _backend
from .errors import ParameterError


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"p must be prime, got {p!r}")


def _check_nonneg(**values: int) -> None:
    for name, v in values.items():
        if not isinstance(v, int) or v < 0:
            raise ParameterError(f"{name} must be a non-negative integer, got {v!r}")


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-``prime`` digits; zero is the empty tuple."""

    prime: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.prime)
        if any(not 0 <= d < self.prime for d in self.digits):
            raise ParameterError(f"digits must lie in [0, {self.prime - 1}]")
        if self.digits and self.digits[-1] == 0:
            raise ParameterError("digit vector has a trailing zero")

    @property
    def value(self) -> int:
        return sum(d * self.prime**i for i, d in enumerate(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        # digits past the most significant one are zero
        return self.digits[i] if i < len(self.digits) else 0


def to_digits(n: int, p: int) -> DigitVector:
    check_prime(p)
    _check_nonneg(n=n)
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitVector(p, tuple(digits))


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p, zero when k > n."""
    check_prime(p)
    _check_nonneg(n=n, k=k)
    return _backend.lucas_binom(n, k, p)


def first_nonzero_binom(n: int, lo: int, hi: int, p: int) -> int | None:
    """Smallest j in [lo, hi] with C(n, j) nonzero mod p."""
    check_prime(p)
    _check_nonneg(n=n)
    j = _backend.first_nonzero_in_row(n, lo, hi, p)
    return None if j < 0 else j


def digits_dominated(n: int, k: int, p: int) -> bool:
    """True iff every base-p digit of k is at most the matching digit of n."""
    dn, dk = to_digits(n, p), to_digits(k, p)
    return all(dk[i] <= dn[i] for i in range(len(dk)))


def minimal_s(k: int) -> int:
    """Least s >= 1 with k < 2**s."""
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")
    return max(1, k.bit_length())


def is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0
