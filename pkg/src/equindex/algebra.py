"""Normal forms in graded-commutative algebras over F_p.

A presentation is an ordered list of generators, each either exterior
(``g^2 = 0``), truncated (``g^t = 0``) or carrying a square-rewrite
``g^2 -> c * m``.  Monomials are exponent tuples aligned with that order, and
every relation sends a monomial to a single signed monomial, so normal forms
of monomials never branch.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import InternalConsistencyError, ParameterError, StructuralError
from .modp_arith import check_prime

EXTERIOR = "exterior"
TRUNCATED = "truncated"
REWRITE = "rewrite"

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int
    kind: str
    truncation: int | None = None
    # rewrite relation name^2 -> coefficient * monomial, monomial as {name: exponent}
    target_coeff: int = 0
    target: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ParameterError(f"generator name {self.name!r} is not an identifier")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ParameterError(f"generator {self.name}: degree must be a positive integer")
        if self.kind == TRUNCATED:
            if not isinstance(self.truncation, int) or self.truncation < 1:
                raise ParameterError(f"generator {self.name}: truncation must be >= 1")
        elif self.kind not in (EXTERIOR, REWRITE):
            raise ParameterError(f"generator {self.name}: unknown kind {self.kind!r}")

    @classmethod
    def exterior(cls, name: str, degree: int) -> GeneratorSpec:
        return cls(name, degree, EXTERIOR)

    @classmethod
    def truncated(cls, name: str, degree: int, t: int) -> GeneratorSpec:
        return cls(name, degree, TRUNCATED, truncation=t)

    @classmethod
    def rewrite(cls, name: str, degree: int, coeff: int, target: Mapping[str, int]) -> GeneratorSpec:
        return cls(name, degree, REWRITE, target_coeff=coeff, target=dict(target))

    @property
    def max_exponent(self) -> int:
        """Largest exponent allowed in normal form."""
        if self.kind == TRUNCATED:
            return self.truncation - 1
        return 1


class AlgebraPresentation:
    """Immutable description of a graded-commutative F_p-algebra."""

    def __init__(self, prime: int, generators: Iterable[GeneratorSpec], name: str = "", metadata=None):
        check_prime(prime)
        self.prime = prime
        self.generators: tuple[GeneratorSpec, ...] = tuple(generators)
        self.name = name
        self.metadata = dict(metadata or {})
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise StructuralError("generator names must be unique")
        self.degrees = tuple(g.degree for g in self.generators)
        self._odd = tuple(i for i, d in enumerate(self.degrees) if d % 2)
        self._rewrites = {}
        for i, g in enumerate(self.generators):
            if prime != 2 and g.degree % 2 and g.kind != EXTERIOR:
                # x^2 = -x^2 forces x^2 = 0 for odd x when p is odd
                raise StructuralError(f"odd-degree generator {g.name} must be exterior for p={prime}")
            if g.kind == REWRITE:
                self._rewrites[i] = self._compile_rewrite(i, g)

    def _compile_rewrite(self, i: int, g: GeneratorSpec) -> tuple[int, Exponents]:
        exps = [0] * len(self.generators)
        for name, e in g.target.items():
            if name not in self.index:
                raise StructuralError(f"rewrite target of {g.name} uses unknown generator {name}")
            j = self.index[name]
            # targets may use g itself linearly, otherwise only earlier generators
            if j > i or (j == i and e > 1):
                raise StructuralError(f"rewrite target of {g.name} must use earlier generators")
            exps[j] = e
        target_degree = sum(e * d for e, d in zip(exps, self.degrees))
        if target_degree != 2 * g.degree:
            raise StructuralError(f"rewrite target of {g.name} has degree {target_degree}, expected {2 * g.degree}")
        return g.target_coeff % self.prime, tuple(exps)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"AlgebraPresentation({self.name!r}, p={self.prime}, {[g.name for g in self.generators]})"

    # -- monomial arithmetic -------------------------------------------------

    def monomial_degree(self, exps: Exponents) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def _merge_sign(self, a: Exponents, b: Exponents) -> int:
        """Sign of reordering a*b into generator order."""
        if self.prime == 2:
            return 1
        swaps = 0
        for j in self._odd:
            if b[j]:
                swaps += b[j] * sum(a[i] for i in self._odd if i > j)
        return -1 if swaps % 2 else 1

    def normalize(self, exps: Exponents, coeff: int = 1) -> tuple[int, Exponents]:
        """Normal form of ``coeff * x^exps`` as (coefficient, exponents); coefficient 0 means zero."""
        p = self.prime
        coeff %= p
        exps = list(exps)
        bound = self.monomial_degree(exps) ** 2 + 1
        steps = 0
        while coeff:
            for i in range(len(exps) - 1, -1, -1):
                e = exps[i]
                g = self.generators[i]
                if g.kind == TRUNCATED:
                    if e >= g.truncation:
                        return 0, tuple(exps)
                    continue
                if e <= 1:
                    continue
                if g.kind == EXTERIOR:
                    return 0, tuple(exps)
                c, target = self._rewrites[i]
                exps[i] -= 2
                # g^2 has even degree, hence is central: rest * target
                coeff = coeff * c * self._merge_sign(exps, target) % p
                exps = [x + y for x, y in zip(exps, target)]
                break
            else:
                return coeff, tuple(exps)
            steps += 1
            if steps > bound:
                raise InternalConsistencyError(f"rewriting did not terminate within {bound} steps")
        return 0, tuple(exps)

    def multiply_monomials(self, a: Exponents, b: Exponents) -> tuple[int, Exponents]:
        sign = self._merge_sign(a, b)
        return self.normalize(tuple(x + y for x, y in zip(a, b)), sign)

    def basis(self, max_degree: int | None = None) -> Iterator[Exponents]:
        """Normal-form monomials, optionally only those of degree <= max_degree."""
        ranges = [range(g.max_exponent + 1) for g in self.generators]
        for exps in itertools.product(*ranges):
            if max_degree is None or self.monomial_degree(exps) <= max_degree:
                yield exps

    # -- element constructors ------------------------------------------------

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {(0,) * len(self): 1})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def gen(self, name: str) -> AlgebraElement:
        return self.monomial({name: 1})

    def monomial(self, exponents: Mapping[str, int], coeff: int = 1) -> AlgebraElement:
        exps = [0] * len(self)
        for name, e in exponents.items():
            exps[self.index[name]] = e
        return AlgebraElement.from_terms(self, {tuple(exps): coeff})

    def monomial_text(self, exps: Exponents) -> str:
        parts = []
        for g, e in zip(self.generators, exps):
            if e == 0:
                continue
            parts.append(g.name if g.kind == EXTERIOR else f"{g.name}^{e}")
        return "*".join(parts) or "1"


class AlgebraElement:
    """An F_p-linear combination of normal-form monomials."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: AlgebraPresentation, terms: Mapping[Exponents, int]):
        # trusted constructor: terms already normal, coefficients nonzero residues
        self.presentation = presentation
        self.terms = dict(terms)

    @classmethod
    def from_terms(cls, presentation: AlgebraPresentation, terms: Mapping[Exponents, int]) -> AlgebraElement:
        out: dict[Exponents, int] = {}
        p = presentation.prime
        for exps, c in terms.items():
            c, exps = presentation.normalize(exps, c)
            if c:
                out[exps] = (out.get(exps, 0) + c) % p
        return cls(presentation, {m: c for m, c in out.items() if c})

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement) or other.presentation is not self.presentation:
            raise StructuralError("elements belong to different presentations")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        p = self.presentation.prime
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return AlgebraElement(self.presentation, out)

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: int) -> AlgebraElement:
        p = self.presentation.prime
        c %= p
        if not c:
            return self.presentation.zero()
        return AlgebraElement(self.presentation, {m: v * c % p for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> AlgebraElement:
        return power(self, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.presentation is other.presentation and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {self.presentation.monomial_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a homogeneous element; None for zero."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ParameterError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pres = self.presentation
        ordered = sorted(self.terms, key=lambda m: (pres.monomial_degree(m), m))
        return " + ".join(f"{self.terms[m]}*{pres.monomial_text(m)}" for m in ordered)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_text()})"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    pres = a.presentation
    p = pres.prime
    out: dict[Exponents, int] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c, m = pres.multiply_monomials(ma, mb)
            if c:
                v = (out.get(m, 0) + c * ca * cb) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return AlgebraElement(pres, out)


def power(a: AlgebraElement, n: int) -> AlgebraElement:
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"exponent must be a non-negative integer, got {n!r}")
    result = a.presentation.one()
    for _ in range(n):
        if result.is_zero():
            break
        result = multiply(result, a)
    return result


def height(a: AlgebraElement, cap: int) -> int | None:
    """Least n >= 1 with a^n = 0, or None if no such n <= cap."""
    deg = a.degree
    if deg is None:
        return 1
    if deg == 0:
        raise ParameterError("height is undefined for degree-0 elements")
    acc = a
    for n in range(1, cap + 1):
        if acc.is_zero():
            return n
        acc = multiply(acc, a)
    return None
