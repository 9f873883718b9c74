"""Indices of real Stiefel manifolds V(l, k) under the antipodal C_2-action.

Everything is driven by the truncation exponent N, the least j in
[l-k+1, l] with C(l, j) odd: the index ideal is <u^N>, Cindex = N - 1, and
a nonvanishing Sq^d(u^(N-1)) in H*(RP^(l-1)) obstructs a map to S^(N-1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraPresentation, GeneratorSpec
from .errors import InternalConsistencyError, ParameterError
from .ideals import IndexIdeal
from .modp_arith import binom_mod_p, first_nonzero_binom, minimal_s
from .steenrod import TruncatedPolyRing, sq

THEOREM_CERTIFIED = "theorem_certified"
OBSTRUCTION_SEARCH = "obstruction_search"
NO_CERTIFICATE = "none"

PAPER_ASSERTED = "paper-asserted"
HEURISTIC = "heuristic"

CERTIFICATE_KEYS = (
    "l", "k", "N", "cindex", "coind_lower", "coind_upper", "s", "alpha",
    "in_family", "case", "sq_degree", "certification", "ind_provenance",
)


@dataclass(frozen=True)
class StiefelParams:
    l: int
    k: int

    def __post_init__(self):
        for v in (self.l, self.k):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParameterError(f"l and k must be integers, got {v!r}")
        if self.l < 2:
            raise ParameterError(f"l must be >= 2, got {self.l}")
        if not 1 <= self.k <= self.l - 1:
            raise ParameterError(f"k must satisfy 1 ≤ k ≤ l−1 (got l={self.l}, k={self.k})")

    @property
    def connectivity(self) -> int:
        return self.l - self.k - 1


@dataclass(frozen=True)
class FamilyDecomposition:
    k: int
    s: int
    alpha: int | None
    in_family: bool


@dataclass(frozen=True)
class NonTidyCertificate:
    params: StiefelParams
    N: int
    cindex: int
    coind_lower: int
    coind_upper: int
    family: FamilyDecomposition
    sq_degree: int | None
    # (N-1, d, C(N-1, d) mod 2)
    binom_witness: tuple[int, int, int] | None
    # (N-1+d, l-1); the first must not exceed the second
    range_witness: tuple[int, int] | None
    case_flag: str
    certification: str

    @property
    def non_tidy(self) -> bool:
        return self.certification != NO_CERTIFICATE

    @property
    def ind_provenance(self) -> str:
        """Where the claim ind > N-1 comes from."""
        if self.certification == THEOREM_CERTIFIED:
            return PAPER_ASSERTED
        if self.certification == OBSTRUCTION_SEARCH:
            return HEURISTIC
        return NO_CERTIFICATE

    def to_dict(self) -> dict:
        return {
            "l": self.params.l,
            "k": self.params.k,
            "N": self.N,
            "cindex": self.cindex,
            "coind_lower": self.coind_lower,
            "coind_upper": self.coind_upper,
            "s": self.family.s,
            "alpha": self.family.alpha,
            "in_family": self.family.in_family,
            "case": self.case_flag,
            "sq_degree": self.sq_degree,
            "certification": self.certification,
            "ind_provenance": self.ind_provenance,
        }


def compute_N(params: StiefelParams) -> int:
    l, k = params.l, params.k
    n = first_nonzero_binom(l, l - k + 1, l, 2)
    if n is None:  # C(l, l) = 1, unreachable
        raise InternalConsistencyError(f"no odd binomial C({l}, j) for j in [{l - k + 1}, {l}]")
    return n


def index_ideal(params: StiefelParams) -> IndexIdeal:
    return IndexIdeal.principal(compute_N(params))


def cindex(params: StiefelParams) -> int:
    return compute_N(params) - 1


def coind_bounds(params: StiefelParams) -> tuple[int, int]:
    """(connectivity lower bound, cohomological-index upper bound) for coind."""
    return params.connectivity, cindex(params)


def family_decompose(params: StiefelParams) -> FamilyDecomposition:
    s = minimal_s(params.k)
    q, r = divmod(params.l - params.k + 1, 2**s)
    in_family = r == 0 and q >= 1
    return FamilyDecomposition(params.k, s, q if in_family else None, in_family)


def _case_flag(params: StiefelParams) -> str:
    two_k = 2 * params.k
    if two_k < params.l:
        return "2k<l"
    if two_k > params.l:
        return "2k>l"
    return "2k=l"


def nontidy_certificate(params: StiefelParams) -> NonTidyCertificate:
    l, k = params.l, params.k
    N = compute_N(params)
    family = family_decompose(params)
    top = N - 1

    d = None
    certification = NO_CERTIFICATE
    if family.in_family:
        if N != l - k + 1:
            raise InternalConsistencyError(f"in-family V({l},{k}) has N={N}, expected {l - k + 1}")
        d_family = 2 ** (family.s - 1)
        c1 = binom_mod_p(top, d_family, 2) == 1
        c2 = N + d_family <= l
        if c1 and c2:
            d, certification = d_family, THEOREM_CERTIFIED
    if d is None:
        d = first_nonzero_binom(top, 1, l - N, 2)
        if d is not None:
            certification = OBSTRUCTION_SEARCH

    binom_witness = range_witness = None
    if d is not None:
        binom_witness = (top, d, binom_mod_p(top, d, 2))
        range_witness = (top + d, l - 1)
        if sq(d, top, TruncatedPolyRing(l)) != top + d:
            raise InternalConsistencyError(f"Sq^{d}(u^{top}) vanishes in RP^{l - 1}")

    lower, upper = params.connectivity, top
    if lower > upper:
        raise InternalConsistencyError(f"coind bounds out of order for V({l},{k})")
    return NonTidyCertificate(
        params=params,
        N=N,
        cindex=top,
        coind_lower=lower,
        coind_upper=upper,
        family=family,
        sq_degree=d,
        binom_witness=binom_witness,
        range_witness=range_witness,
        case_flag=_case_flag(params),
        certification=certification,
    )


def projective_space_cohomology(dim: int) -> AlgebraPresentation:
    """H*(RP^dim; F_2) = F_2[u]/(u^(dim+1))."""
    return AlgebraPresentation(2, [GeneratorSpec.truncated("u", 1, dim + 1)], name=f"H*(RP^{dim})")


def projective_stiefel_cohomology(params: StiefelParams) -> AlgebraPresentation:
    """Additive model F_2[z]/(z^N) (x) Lambda(z_(l-k), ..., z_(l-1)) of H*(V(l,k)/C_2; F_2).

    Only the additive structure is determined this way; products among the
    exterior classes follow the tensor model.
    """
    l, k = params.l, params.k
    gens = [GeneratorSpec.truncated("z", 1, compute_N(params))]
    gens += [GeneratorSpec.exterior(f"z_{i}", i) for i in range(l - k, l)]
    return AlgebraPresentation(2, gens, name=f"H*(X({l},{k}))")
