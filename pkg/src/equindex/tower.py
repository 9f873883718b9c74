"""Cohomology of the orbit spaces X(k)/C_p of the iterated S^3-bundle tower.

R_0 = Lambda(e_0) (x) F_p[z_0]/(z_0^2) is the cohomology of the lens space
L_p(3), and R_(k+1) = R_k[e_(k+1), z_(k+1)] / (e_(k+1)^2, z_(k+1)^2 + z_k z_(k+1)).
The classifying map sends eps -> e_k and y -> z_k, so the index ideal is read
off by zero-testing e_k^a z_k^b.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, AlgebraPresentation, GeneratorSpec, height
from .errors import InternalConsistencyError, ParameterError
from .ideals import IndexIdeal
from .modp_arith import check_prime
from .stiefel import PAPER_ASSERTED

TOWER_REPORT_KEYS = (
    "k", "p", "ht_z", "ht_ez", "cindex_exact", "paper_lower",
    "paper_alternatives", "coind", "coind_provenance",
)

# every level contains S^3 = E^(3)C_p equivariantly and no larger skeleton maps in
TOWER_COIND = 3


@dataclass(frozen=True)
class TowerLevel:
    k: int
    p: int
    ring: AlgebraPresentation

    @property
    def e(self) -> AlgebraElement:
        return self.ring.gen(f"e{self.k}")

    @property
    def z(self) -> AlgebraElement:
        return self.ring.gen(f"z{self.k}")

    def z_at(self, i: int) -> AlgebraElement:
        return self.ring.gen(f"z{i}")

    def e_at(self, i: int) -> AlgebraElement:
        return self.ring.gen(f"e{i}")


@dataclass(frozen=True)
class TowerReport:
    k: int
    p: int
    ht_z: int
    ht_ez: int
    cindex_exact: int
    paper_lower: int
    paper_alternatives: tuple[int, int]
    coind: int = TOWER_COIND
    coind_provenance: str = PAPER_ASSERTED

    @property
    def index_ideal(self) -> IndexIdeal:
        return IndexIdeal(self.p, min_even_kernel=self.ht_z, min_odd_kernel=self.ht_ez)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "ht_z": self.ht_z,
            "ht_ez": self.ht_ez,
            "cindex_exact": self.cindex_exact,
            "paper_lower": self.paper_lower,
            "paper_alternatives": list(self.paper_alternatives),
            "coind": self.coind,
            "coind_provenance": self.coind_provenance,
        }


def _check(k: int, p: int) -> None:
    check_prime(p)
    if p == 2:
        raise ParameterError("the tower needs an odd prime p (the action uses a primitive p-th root of unity)")
    if not isinstance(k, int) or k < 0:
        raise ParameterError(f"tower level k must be a non-negative integer, got {k!r}")


def tower_generators(k: int, p: int) -> list[GeneratorSpec]:
    gens = [GeneratorSpec.exterior("e0", 1), GeneratorSpec.truncated("z0", 2, 2)]
    for i in range(1, k + 1):
        gens.append(GeneratorSpec.exterior(f"e{i}", 1))
        # z_i^2 = -z_(i-1) z_i
        gens.append(GeneratorSpec.rewrite(f"z{i}", 2, p - 1, {f"z{i - 1}": 1, f"z{i}": 1}))
    return gens


def build_tower(k: int, p: int) -> TowerLevel:
    _check(k, p)
    ring = AlgebraPresentation(
        p,
        tower_generators(k, p),
        name=f"H*(X({k})/C_{p}; F_{p})",
        metadata={"bockstein": {f"e{i}": f"z{i}" for i in range(k + 1)}},
    )
    return TowerLevel(k, p, ring)


def height_of_z(k: int, p: int, level: TowerLevel | None = None) -> int:
    level = level or build_tower(k, p)
    cap = k + 4
    ht = height(level.z, cap)
    if ht is None:
        raise InternalConsistencyError(f"ht(z{k}) exceeds {cap} for p={p}")
    return ht


def kernel_scan(level: TowerLevel, max_degree: int) -> list[tuple[int, int, bool]]:
    """(a, b, image vanishes) for each eps^a y^b of degree <= max_degree, by degree."""
    rows = []
    one = level.ring.one()
    for degree in range(max_degree + 1):
        a, b = degree % 2, degree // 2
        img = (level.e if a else one) * (level.z ** b)
        rows.append((a, b, img.is_zero()))
    return rows


def tower_cindex(k: int, p: int) -> TowerReport:
    _check(k, p)
    level = build_tower(k, p)
    cap_degree = 2 * (k + 4)
    scan = kernel_scan(level, cap_degree)

    first = next((2 * b + a for a, b, vanishes in scan if vanishes), None)
    ht_ez = next((b for a, b, vanishes in scan if a == 1 and vanishes), None)
    if first is None or ht_ez is None:
        raise InternalConsistencyError(f"no kernel element of degree <= {cap_degree} at level {k}, p={p}")
    ht_z = height_of_z(k, p, level)

    report = TowerReport(
        k=k,
        p=p,
        ht_z=ht_z,
        ht_ez=ht_ez,
        cindex_exact=first - 1,
        paper_lower=2 * k + 2,
        paper_alternatives=(2 * k + 2, 2 * k + 3),
    )
    if report.cindex_exact != report.index_ideal.cindex:
        raise InternalConsistencyError("kernel scan disagrees with the index ideal")
    return report
