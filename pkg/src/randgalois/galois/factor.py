"""Factorization of integer polynomials and Frobenius cycle types.

`irreducible_over_Z` is the reducibility detector used by the classifier and
the census.  It tries, in order: trivial factors (x, repeated factors,
integer roots), the degree-set sieve over sampled primes, and finally a
complete Zassenhaus factorization (Hensel lifting + factor recombination).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations

from ..arith import FactorBudgetExceeded, divisors, is_prime, primes_above, symmetric_mod
from ..errors import BadPrime
from ..poly import IntPolynomial, poly_gcd
from . import gf

__all__ = [
    "CycleType",
    "FrobeniusSampler",
    "IrreducibilityResult",
    "factor_degrees_mod_p",
    "irreducible_over_Z",
    "integer_roots",
    "factor_squarefree_Z",
    "feasible_factor_degrees",
]


@dataclass(frozen=True)
class CycleType:
    """Factor degrees of p modulo an unramified prime (a Frobenius cycle type)."""

    partition: tuple
    prime: int

    @property
    def degree(self) -> int:
        return sum(self.partition)

    def is_even(self) -> bool:
        return sum(1 for part in self.partition if part % 2 == 0) % 2 == 0

    def to_json(self):
        return {"prime": self.prime, "partition": list(self.partition)}


def factor_degrees_mod_p(p: IntPolynomial, prime: int) -> CycleType:
    """Cycle type of Frobenius at `prime`; the reduction must be squarefree."""
    if prime < 3 or not is_prime(prime):
        raise BadPrime(f"{prime} is not an odd prime")
    f = gf.reduce(p.coeffs, prime)
    if len(f) - 1 != p.degree:
        raise BadPrime(f"{prime} divides the leading coefficient")
    if p.degree == 1:
        return CycleType((1,), prime)
    if not gf.is_squarefree(f, prime):
        raise BadPrime(f"{p} is not squarefree modulo {prime}")
    return CycleType(tuple(gf.factor_degrees(f, prime)), prime)


def feasible_factor_degrees(parts) -> int:
    """Bitmask of all subset sums of `parts` (bit m set iff m is reachable)."""
    mask = 1
    for part in parts:
        mask |= mask << part
    return mask


class FrobeniusSampler:
    """Lazily draws cycle types of p at a deterministic sequence of primes.

    The primes are the first `budget` primes above deg p that do not divide
    disc(p); with a seed, a seeded shuffle of a larger pool is used instead.
    """

    def __init__(self, p: IntPolynomial, budget: int = 40, seed: int | None = None):
        self.p = p
        self.budget = budget
        self.types: list = []
        self.skipped: list = []
        d = max(p.degree, 2)
        if seed is None:
            pool = primes_above(d, 4 * budget + 20)
        else:
            pool = list(primes_above(d, 10 * budget + 20))
            random.Random(seed).shuffle(pool)
        self._pool = iter(pool)

    @property
    def exhausted(self) -> bool:
        return len(self.types) >= self.budget

    def draw(self) -> CycleType | None:
        if self.exhausted:
            return None
        for ell in self._pool:
            try:
                ct = factor_degrees_mod_p(self.p, ell)
            except BadPrime:
                self.skipped.append(ell)
                continue
            self.types.append(ct)
            return ct
        self.budget = len(self.types)
        return None

    def fill(self):
        while self.draw() is not None:
            pass
        return self.types


@dataclass
class IrreducibilityResult:
    """Outcome of `irreducible_over_Z`: status is irreducible/reducible/unknown."""

    status: str
    factors: tuple = ()
    method: str = ""
    primes: tuple = ()
    cycle_types: tuple = ()
    notes: dict = field(default_factory=dict)

    @property
    def irreducible(self) -> bool:
        return self.status == "irreducible"

    @property
    def reducible(self) -> bool:
        return self.status == "reducible"

    @property
    def factor_degrees(self) -> list:
        return sorted((f.degree for f in self.factors), reverse=True)

    def to_json(self):
        out = {"status": self.status, "method": self.method}
        if self.factors:
            out["factor_degrees"] = self.factor_degrees
            out["factors"] = [list(f.coeffs) for f in self.factors]
        if self.primes:
            out["primes"] = list(self.primes)
        out.update(self.notes)
        return out


def _cauchy_bound(q: IntPolynomial) -> int:
    lc = abs(q.leading)
    return 1 + max((abs(c) for c in q.coeffs[:-1]), default=0) // lc + 1


def integer_roots(q: IntPolynomial, divisor_limit: int = 10 ** 18) -> list:
    """All distinct integer roots of a nonzero polynomial, ascending."""
    if q.is_zero():
        raise ValueError("zero polynomial has every integer as a root")
    roots = []
    c = list(q.coeffs)
    if c[0] == 0:
        roots.append(0)
        while c and c[0] == 0:
            c.pop(0)
        q = IntPolynomial(c)
    if q.degree < 1:
        return roots
    a0 = q.coeffs[0]
    bound = _cauchy_bound(q)
    if abs(a0) <= divisor_limit:
        try:
            divs = divisors(a0)
        except FactorBudgetExceeded:
            divs = None
        if divs is not None:
            for t in divs:
                if t > bound:
                    break
                for z in (t, -t):
                    if q(z) == 0:
                        roots.append(z)
            return sorted(roots)
    return sorted(roots + _integer_roots_modular(q, bound))


def _squarefree_part(q: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(q, q.derivative())
    if g.degree <= 0:
        return q
    return q.exact_div(g)


def _good_prime(q: IntPolynomial, start: int = 2):
    for ell in primes_above(max(start, 2), 400):
        if q.leading % ell == 0:
            continue
        f = gf.reduce(q.coeffs, ell)
        if gf.is_squarefree(f, ell):
            return ell
    raise ArithmeticError("no good prime found")


def _integer_roots_modular(q: IntPolynomial, bound: int) -> list:
    q = _squarefree_part(q)
    if q.degree == 1:
        z, r = divmod(-q.coeffs[0], q.coeffs[1])
        return [] if r else [z]
    ell = _good_prime(q, 2)
    dq = q.derivative()
    out = []
    for r in gf.roots(q.coeffs, ell):
        z, mod = r, ell
        while mod <= 2 * bound:
            mod = mod * mod
            inv = pow(dq(z) % mod, -1, mod)
            z = (z - q(z) * inv) % mod
        z = symmetric_mod(z, mod)
        if q(z) == 0:
            out.append(z)
    return out


def _mignotte_bound(f: IntPolynomial) -> int:
    norm = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    return (1 << f.degree) * norm


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g h, s g + t h = 1 from modulus m to m**2 (monic g, h)."""
    m2 = m * m
    e = gf.sub(gf.reduce(f, m2), gf.mul(g, h, m2), m2)
    q, r = gf.divmod_(gf.mul(s, e, m2), h, m2)
    g1 = gf.add(gf.add(g, gf.mul(t, e, m2), m2), gf.mul(q, g, m2), m2)
    h1 = gf.add(h, r, m2)
    b = gf.sub(gf.add(gf.mul(s, g1, m2), gf.mul(t, h1, m2), m2), [1], m2)
    c, d = gf.divmod_(gf.mul(s, b, m2), h1, m2)
    s1 = gf.sub(s, d, m2)
    t1 = gf.sub(gf.sub(t, gf.mul(t, b, m2), m2), gf.mul(c, g1, m2), m2)
    return g1, h1, s1, t1, m2


def _lift_pair(f: list, g: list, h: list, p: int, target: int):
    _, s, t = gf.xgcd(g, h, p)
    m = p
    while m < target:
        g, h, s, t, m = _hensel_step(f, g, h, s, t, m)
    return gf.reduce(g, m), gf.reduce(h, m), m


def hensel_lift(f: IntPolynomial, factors: list, p: int, target: int):
    """Lift a mod-p factorization of monic squarefree f to modulus >= target."""
    lifted = []
    rest = list(f.coeffs)
    todo = list(factors)
    modulus = p
    while len(todo) > 1:
        g = todo.pop(0)
        h = [1]
        for other in todo:
            h = gf.mul(h, other, p)
        g_hi, h_hi, modulus = _lift_pair(rest, g, h, p, target)
        lifted.append(g_hi)
        rest = h_hi
        # rest is now known modulo `modulus`; replace by the exact cofactor image
        rest = gf.reduce(rest, modulus)
    lifted.append(rest)
    return lifted, modulus


def _symmetric(poly: list, m: int) -> IntPolynomial:
    return IntPolynomial(symmetric_mod(c, m) for c in poly)


def factor_squarefree_Z(f: IntPolynomial, max_subsets: int = 1 << 14,
                        seed: int = 0):
    """Irreducible factors of a monic squarefree f over Z (Zassenhaus).

    Returns the list of factors, or None when recombination would exceed
    `max_subsets` candidate products.
    """
    if not f.is_monic():
        raise ValueError("factor_squarefree_Z expects a monic polynomial")
    n = f.degree
    if n <= 1:
        return [f]
    rng = random.Random(seed)
    best = None
    tried = 0
    for ell in primes_above(max(n, 2), 60):
        fm = gf.reduce(f.coeffs, ell)
        if not gf.is_squarefree(fm, ell):
            continue
        degs = gf.factor_degrees(fm, ell)
        if best is None or len(degs) < len(best[1]):
            best = (ell, degs)
        tried += 1
        if len(degs) == 1 or tried >= 5:
            break
    if best is None:
        raise ArithmeticError("no unramified prime found")
    ell, degs = best
    if len(degs) == 1:
        return [f]
    mod_factors = gf.factor_squarefree(gf.reduce(f.coeffs, ell), ell, rng)
    bound = 2 * _mignotte_bound(f) + 1
    lifted, m = hensel_lift(f, mod_factors, ell, bound)
    remaining = f
    found = []
    pool = list(lifted)
    size = 1
    spent = 0
    while 2 * size <= len(pool):
        hit = False
        for combo in combinations(range(len(pool)), size):
            spent += 1
            if spent > max_subsets:
                return None
            prod = [1]
            for i in combo:
                prod = gf.mul(prod, pool[i], m)
            cand = _symmetric(prod, m)
            try:
                quo = remaining.exact_div(cand)
            except ArithmeticError:
                continue
            found.append(cand)
            remaining = quo
            pool = [g for i, g in enumerate(pool) if i not in combo]
            hit = True
            break
        if not hit:
            size += 1
    found.append(remaining)
    return found


def _trivial_split(p: IntPolynomial, assume_squarefree: bool = False):
    """Factors exhibited by cheap checks, or None."""
    if p.coeffs[0] == 0:
        return [IntPolynomial.x(), IntPolynomial(p.coeffs[1:])]
    if assume_squarefree:
        return None
    g = poly_gcd(p, p.derivative())
    if g.degree >= 1:
        return [g, p.exact_div(g)]
    return None


def irreducible_over_Z(p: IntPolynomial, prime_budget: int = 40,
                       sampler: FrobeniusSampler | None = None,
                       max_subsets: int = 1 << 14,
                       root_search_limit: int = 10 ** 12,
                       assume_squarefree: bool = False) -> IrreducibilityResult:
    """Three-way irreducibility test for a monic integer polynomial.

    A certificate of irreducibility is either structural (degree <= 3 without
    integer roots), the degree sieve (no proper factor degree is compatible
    with every sampled cycle type), or a complete Zassenhaus factorization.
    "unknown" is returned only when recombination exceeds `max_subsets`.
    """
    if not p.is_monic():
        raise ValueError("irreducible_over_Z expects a monic polynomial")
    d = p.degree
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d == 1:
        return IrreducibilityResult("irreducible", method="linear")
    split = _trivial_split(p, assume_squarefree)
    if split is not None:
        return IrreducibilityResult("reducible", tuple(split), method="trivial-factor")
    if abs(p.coeffs[0]) <= root_search_limit:
        rts = integer_roots(p, divisor_limit=root_search_limit)
        if rts:
            lin = IntPolynomial((-rts[0], 1))
            return IrreducibilityResult("reducible", (lin, p.exact_div(lin)),
                                        method="integer-root")
        if d <= 3:
            return IrreducibilityResult("irreducible", method="no-linear-factor")
    if sampler is None:
        sampler = FrobeniusSampler(p, prime_budget)
    full = (1 << d) | 1
    common = (1 << (d + 1)) - 1
    for ct in sampler.types:
        common &= feasible_factor_degrees(ct.partition)
    while common != full:
        ct = sampler.draw()
        if ct is None:
            break
        common &= feasible_factor_degrees(ct.partition)
    if common == full:
        return IrreducibilityResult(
            "irreducible", method="degree-sieve",
            primes=tuple(ct.prime for ct in sampler.types),
            cycle_types=tuple(sampler.types))
    factors = factor_squarefree_Z(p, max_subsets=max_subsets)
    used = tuple(ct.prime for ct in sampler.types)
    if factors is None:
        return IrreducibilityResult("unknown", method="recombination-budget",
                                    primes=used, cycle_types=tuple(sampler.types))
    if len(factors) == 1:
        return IrreducibilityResult("irreducible", method="zassenhaus", primes=used,
                                    cycle_types=tuple(sampler.types))
    return IrreducibilityResult("reducible", tuple(factors), method="zassenhaus",
                                primes=used, cycle_types=tuple(sampler.types))
