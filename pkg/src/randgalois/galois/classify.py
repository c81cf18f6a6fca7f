"""Certified Galois-group verdicts for monic integer polynomials.

The decision chain:

1. disc(p) = 0 gives Degenerate.
2. An exact factor gives Reducible.  Otherwise an irreducibility certificate
   shows the group G is transitive.
3. Frobenius cycle types at unramified primes are elements of G (Dedekind).
   From them we read primitivity, transpositions and prime cycles, and
   conclude A_d <= G by Jordan's theorem when possible.
4. For each k in the k-list, k-homogeneity is certified either by exact
   irreducibility of the wedge resolvent p_k or by the degree sieve applied
   to the cycle types induced on k-subsets (the factor degrees of p_k modulo
   an unramified prime).  A_d <= G implies every k.
5. With 6-homogeneity at d >= 12 the group is A_d or S_d and the
   discriminant decides.  At any d, A_d <= G plus a non-square discriminant
   gives S_d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations

from ..arith import is_prime
from ..errors import DegreeTooLow, NotMonic
from ..poly import IntPolynomial, discriminant, is_perfect_square
from ..wedge import wedge_resolvent
from .factor import (
    CycleType,
    FrobeniusSampler,
    feasible_factor_degrees,
    irreducible_over_Z,
)

__all__ = [
    "ClassifyBudget",
    "GaloisTag",
    "GaloisVerdict",
    "CycleEvidence",
    "classify",
    "homogeneity_report",
    "HomogeneityReport",
    "induced_orbit_lengths",
    "exceptional_families",
]

EXCEPTIONAL_DEGREES = (12, 23, 24, 64, 1024)


class GaloisTag(str, Enum):
    REDUCIBLE = "Reducible"
    DEGENERATE = "Degenerate"
    ALTERNATING = "ProvenContainedInAlternating"
    FULL_SYMMETRIC = "ProvenFullSymmetric"
    HOMOGENEOUS = "HomogeneityCertified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ClassifyBudget:
    """Knobs for `classify`.

    resolvent_route: "exact" factors p_k itself, "cycle" uses induced cycle
    types only, "auto" picks exact when binomial(d, k) <= exact_max_degree.
    """

    primes: int = 40
    k_list: tuple | None = None
    seed: int | None = None
    resolvent_route: str = "auto"
    exact_max_degree: int = 20
    max_subsets: int = 1 << 14
    early_exit: bool = True

    def ks_for(self, d: int) -> list:
        if self.k_list is None:
            ks = [2, 3] + ([6] if d >= 12 else [])
        else:
            ks = list(self.k_list)
        return sorted({k for k in ks if 1 <= k <= d})

    def to_json(self):
        return {
            "primes": self.primes,
            "k_list": None if self.k_list is None else list(self.k_list),
            "seed": self.seed,
            "resolvent_route": self.resolvent_route,
            "exact_max_degree": self.exact_max_degree,
        }


def _prime_cycle(parts: tuple, q: int) -> bool:
    """True if some power of an element of this cycle type is a single q-cycle."""
    hits = [x for x in parts if x % q == 0]
    return len(hits) == 1 and hits[0] == q


class CycleEvidence:
    """Group-theoretic facts accumulated from cycle types of a transitive G."""

    def __init__(self, d: int):
        self.d = d
        self.primitive = d <= 3 or is_prime(d)
        self.primitive_reason = None
        if self.primitive:
            self.primitive_reason = "prime degree" if d > 3 else "small degree"
        self.transposition = None
        self.jordan_cycle = None
        self.odd = None
        self.alternating_reason = "transitive of degree <= 3" if d <= 3 else None

    @property
    def contains_alternating(self) -> bool:
        return self.alternating_reason is not None

    def add(self, ct: CycleType):
        d = self.d
        parts = ct.partition
        if not ct.is_even() and self.odd is None:
            self.odd = ct
        if not self.primitive:
            if sorted(parts) == [1, d - 1] and d > 2:
                self.primitive = True
                self.primitive_reason = f"2-transitive: type [{d - 1}, 1] at {ct.prime}"
            else:
                for x in parts:
                    if 2 * x > d and is_prime(x) and _prime_cycle(parts, x):
                        self.primitive = True
                        self.primitive_reason = f"{x}-cycle with {x} > d/2 at {ct.prime}"
                        break
        if self.transposition is None and _prime_cycle(parts, 2):
            self.transposition = ct
        if self.jordan_cycle is None:
            for x in set(parts):
                if is_prime(x) and (x == 3 or x <= d - 3) and _prime_cycle(parts, x):
                    self.jordan_cycle = (x, ct)
                    break
        if self.primitive and self.alternating_reason is None:
            if self.transposition is not None:
                self.alternating_reason = (
                    f"primitive ({self.primitive_reason}) with a transposition "
                    f"(type {list(self.transposition.partition)} at {self.transposition.prime})")
            elif self.jordan_cycle is not None:
                x, w = self.jordan_cycle
                self.alternating_reason = (
                    f"primitive ({self.primitive_reason}) with a {x}-cycle "
                    f"(type {list(w.partition)} at {w.prime})")

    def to_json(self):
        return {
            "primitive": self.primitive,
            "primitive_reason": self.primitive_reason,
            "contains_alternating": self.contains_alternating,
            "alternating_reason": self.alternating_reason,
            "odd_type": None if self.odd is None else self.odd.to_json(),
        }


@lru_cache(maxsize=4096)
def induced_orbit_lengths(parts: tuple, k: int) -> tuple:
    """Cycle lengths of a permutation of the given cycle type acting on k-subsets."""
    d = sum(parts)
    perm = [0] * d
    start = 0
    for length in parts:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    seen = set()
    lengths = []
    for s in combinations(range(d), k):
        mask = 0
        for i in s:
            mask |= 1 << i
        if mask in seen:
            continue
        n = 0
        cur = mask
        while cur not in seen:
            seen.add(cur)
            n += 1
            nxt = 0
            m = cur
            while m:
                low = m & -m
                nxt |= 1 << perm[low.bit_length() - 1]
                m ^= low
            cur = nxt
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=4096)
def _induced_mask(parts: tuple, k: int) -> int:
    return feasible_factor_degrees(induced_orbit_lengths(parts, k))


def exceptional_families(d: int, k: int) -> list:
    """Known groups of degree d that are k-homogeneous but not k-transitive,
    and the degrees with exceptional highly transitive groups."""
    notes = []
    if 2 * k <= d:
        if k == 2 and d % 4 == 3 and _is_prime_power(d):
            notes.append(f"k=2: subgroups of AGammaL(1,{d}) with {d} = 3 mod 4")
        if k == 3 and (d - 1) % 4 == 3 and _is_prime_power(d - 1):
            notes.append(f"k=3: PSL(2,{d - 1}) <= G <= PGammaL(2,{d - 1})")
        if k == 3 and d == 8:
            notes.append("k=3: AGL(1,8) or AGammaL(1,8)")
        if k == 3 and d == 32:
            notes.append("k=3: AGammaL(1,32)")
        if k == 4 and d == 9:
            notes.append("k=4: PSL(2,8) or PGammaL(2,8)")
        if k == 4 and d == 33:
            notes.append("k=4: PGammaL(2,32)")
    if d in EXCEPTIONAL_DEGREES:
        notes.append(f"degree {d} carries exceptional highly transitive groups")
    return notes


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            while n % q == 0:
                n //= q
            return n == 1
    return True


@dataclass
class GaloisVerdict:
    tag: GaloisTag
    degree: int
    homogeneity: list = field(default_factory=list)
    disc: int | None = None
    disc_square: bool = False
    evidence: list = field(default_factory=list)
    factor_degrees: list = field(default_factory=list)
    cycle_types: list = field(default_factory=list)

    def __post_init__(self):
        if self.tag is GaloisTag.FULL_SYMMETRIC and self.disc_square:
            raise AssertionError("full symmetric verdict with a square discriminant")

    @property
    def contained_in_alternating(self) -> bool:
        """Gal(p) <= A_d, from the discriminant square test (squarefree p)."""
        return self.disc_square

    def to_json(self):
        return {
            "tag": self.tag.value,
            "degree": self.degree,
            "homogeneity": list(self.homogeneity),
            "disc": None if self.disc is None else str(self.disc),
            "disc_square": self.disc_square,
            "factor_degrees": list(self.factor_degrees),
            "evidence": self.evidence,
        }


def _homogeneity_exact(p: IntPolynomial, k: int, budget: ClassifyBudget):
    pk = wedge_resolvent(p, k, check_squarefree=False).resolvent
    res = irreducible_over_Z(pk, prime_budget=budget.primes, max_subsets=budget.max_subsets)
    return res.irreducible, {"test": "wedge-resolvent", "k": k, "route": "exact",
                             "degree": pk.degree, "result": res.to_json()}


def _homogeneity_cycles(sampler: FrobeniusSampler, d: int, k: int):
    n = math.comb(d, k)
    full = (1 << n) | 1
    common = (1 << (n + 1)) - 1
    used = []
    i = 0
    while common != full:
        if i < len(sampler.types):
            ct = sampler.types[i]
        else:
            ct = sampler.draw()
            if ct is None:
                break
        i += 1
        used.append(ct.prime)
        common &= _induced_mask(ct.partition, k)
    ok = common == full
    return ok, {"test": "wedge-resolvent", "k": k, "route": "induced-cycle-types",
                "degree": n, "certified": ok, "primes": used}


def classify(p: IntPolynomial, budget: ClassifyBudget | None = None) -> GaloisVerdict:
    budget = budget or ClassifyBudget()
    if not p.is_monic():
        raise NotMonic("classify needs a monic polynomial")
    d = p.degree
    if d < 2:
        raise DegreeTooLow("classify needs degree >= 2")
    disc = discriminant(p)
    if disc == 0:
        return GaloisVerdict(GaloisTag.DEGENERATE, d, disc=0,
                             evidence=[{"test": "discriminant", "value": "0"}])
    square = is_perfect_square(disc)
    evidence = [{"test": "discriminant", "value": str(disc), "square": square}]
    sampler = FrobeniusSampler(p, budget.primes, seed=budget.seed)

    irr = irreducible_over_Z(p, sampler=sampler, max_subsets=budget.max_subsets,
                             assume_squarefree=True)
    evidence.append({"test": "irreducibility", **irr.to_json()})
    if irr.reducible:
        return GaloisVerdict(GaloisTag.REDUCIBLE, d, disc=disc, disc_square=square,
                             evidence=evidence, factor_degrees=irr.factor_degrees,
                             cycle_types=list(sampler.types))
    if not irr.irreducible:
        return GaloisVerdict(GaloisTag.INCONCLUSIVE, d, disc=disc, disc_square=square,
                             evidence=evidence, cycle_types=list(sampler.types))

    cyc = CycleEvidence(d)
    for ct in sampler.types:
        cyc.add(ct)
    while not cyc.contains_alternating:
        ct = sampler.draw()
        if ct is None:
            break
        cyc.add(ct)
    if not budget.early_exit:
        while (ct := sampler.draw()) is not None:
            cyc.add(ct)
    evidence.append({"test": "cycle-types", **cyc.to_json(),
                     "types": [ct.to_json() for ct in sampler.types]})

    certified = []
    for k in budget.ks_for(d):
        if cyc.contains_alternating:
            certified.append(k)
            evidence.append({"test": "wedge-resolvent", "k": k, "route": "implied",
                             "reason": "A_d <= G is k-homogeneous"})
            continue
        route = budget.resolvent_route
        if route == "auto":
            route = "exact" if math.comb(d, k) <= budget.exact_max_degree else "cycle"
        if route == "exact":
            ok, ev = _homogeneity_exact(p, k, budget)
        elif route == "cycle":
            ok, ev = _homogeneity_cycles(sampler, d, k)
        else:
            raise ValueError(f"unknown resolvent route {route!r}")
        evidence.append(ev)
        if ok:
            certified.append(k)

    if square:
        evidence.append({"test": "alternating-resolvent", "contained": True,
                         "note": "Gal(p) <= A_d"})
    tag = GaloisTag.HOMOGENEOUS if certified else GaloisTag.INCONCLUSIVE
    if d >= 12 and 6 in certified:
        tag = GaloisTag.ALTERNATING if square else GaloisTag.FULL_SYMMETRIC
        evidence.append({"test": "six-homogeneous", "conclusion":
                         "A_d" if square else "S_d",
                         "note": "6-homogeneous of degree >= 12 is A_d or S_d"})
    elif cyc.contains_alternating and not square:
        tag = GaloisTag.FULL_SYMMETRIC
        evidence.append({"test": "cycle-type-path", "conclusion": "S_d",
                         "reason": cyc.alternating_reason})
    return GaloisVerdict(tag, d, homogeneity=certified, disc=disc, disc_square=square,
                         evidence=evidence, cycle_types=list(sampler.types))


@dataclass
class HomogeneityReport:
    k: int
    certified: bool
    resolvent_degree: int
    result: dict
    exceptions: list

    def __bool__(self):
        return self.certified

    def to_json(self):
        return {"k": self.k, "certified": self.certified,
                "resolvent_degree": self.resolvent_degree,
                "result": self.result, "exceptions": self.exceptions}


def homogeneity_report(p: IntPolynomial, k: int, prime_budget: int = 40,
                       max_subsets: int = 1 << 14) -> HomogeneityReport:
    """Is Gal(p) k-homogeneous, certified by irreducibility of p_k?"""
    pk = wedge_resolvent(p, k).resolvent
    res = irreducible_over_Z(pk, prime_budget=prime_budget, max_subsets=max_subsets)
    return HomogeneityReport(k, res.irreducible, pk.degree, res.to_json(),
                             exceptional_families(p.degree, k))
