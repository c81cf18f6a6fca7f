"""Invariants belonging to subgroups of S_d and their resolvents Q_G(p).

Permutations are tuples of 0-based images.  A permutation s acts on
polynomials by substituting x_i -> x_{s(i)}, which is a left action:
t(s(F)) = (t o s)(F).  The value of s(F) at the roots r_0..r_{d-1} is
F(r_{s(0)}, ..., r_{s(d-1)}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple, Sequence

from .balls import Ball, certified_expansion
from .errors import DegreeTooLow, NotAGroup, NotMonic, NotSquarefree
from .galois.factor import integer_roots
from .poly import IntPolynomial, discriminant

__all__ = [
    "GroupInvariant",
    "ResolventPolynomial",
    "IntegerRootResult",
    "star_invariant",
    "group_sum_invariant",
    "difference_product",
    "elementary_symmetric",
    "alternating_group",
    "symmetric_group",
    "coset_representatives",
    "stabilizer",
    "alternating_resolvent",
    "numeric_resolvent",
    "has_integer_root",
    "compose",
    "is_even_permutation",
]


def compose(a: tuple, b: tuple) -> tuple:
    """a o b (apply b first)."""
    return tuple(a[i] for i in b)


def inverse(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def is_even_permutation(a: Sequence[int]) -> bool:
    seen = [False] * len(a)
    parity = 0
    for i in range(len(a)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = a[j]
                length += 1
            parity ^= (length - 1) & 1
    return parity == 0


def symmetric_group(d: int) -> list:
    return list(permutations(range(d)))


def alternating_group(d: int) -> list:
    return [s for s in permutations(range(d)) if is_even_permutation(s)]


def _permute_exponents(exps: tuple, s: tuple) -> tuple:
    out = [0] * len(exps)
    for i, e in enumerate(exps):
        out[s[i]] = e
    return tuple(out)


@dataclass(frozen=True)
class GroupInvariant:
    """Integer polynomial in x_0..x_{d-1} as sorted (exponents, coefficient) pairs."""

    arity: int
    terms: tuple
    group: object = None

    @classmethod
    def from_dict(cls, arity: int, terms: dict, group=None) -> "GroupInvariant":
        return cls(arity, tuple(sorted((e, c) for e, c in terms.items() if c)), group)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def permuted(self, s: tuple) -> "GroupInvariant":
        moved = {_permute_exponents(e, s): c for e, c in self.terms}
        return GroupInvariant.from_dict(self.arity, moved, None)

    def is_fixed_by(self, s: tuple) -> bool:
        return self.permuted(s).terms == self.terms

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def evaluate(self, values: Sequence):
        """Exact evaluation at integer/rational points."""
        total = 0
        for e, c in self.terms:
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def evaluate_balls(self, values: Sequence[Ball]) -> Ball:
        prec = values[0].prec
        top = [max(e[i] for e, _ in self.terms) for i in range(self.arity)]
        powers = []
        for v, m in zip(values, top):
            row = [Ball.exact(1, prec)]
            for _ in range(m):
                row.append(row[-1] * v)
            powers.append(row)
        total = Ball.exact(0, prec)
        for e, c in self.terms:
            term = Ball.exact(c, prec)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            total = total + term
        return total


def star_invariant(d: int) -> GroupInvariant:
    """The single monomial x_0 * x_1**2 * ... * x_{d-1}**d."""
    if d < 2:
        raise DegreeTooLow("star invariant needs d >= 2")
    return GroupInvariant.from_dict(d, {tuple(range(1, d + 1)): 1}, "trivial")


def _check_group(d: int, elements) -> list:
    elems = [tuple(s) for s in elements]
    ident = tuple(range(d))
    for s in elems:
        if sorted(s) != list(ident):
            raise NotAGroup(f"{s} is not a permutation of {d} points")
    pool = set(elems)
    if ident not in pool:
        raise NotAGroup("identity missing")
    for a in pool:
        if inverse(a) not in pool:
            raise NotAGroup(f"inverse of {a} missing")
        for b in pool:
            if compose(a, b) not in pool:
                raise NotAGroup(f"not closed: {a} o {b}")
    return sorted(pool)


def group_sum_invariant(d: int, group) -> GroupInvariant:
    """Sum over s in G of s(F*); its stabilizer in S_d is exactly G."""
    elems = _check_group(d, group)
    base = tuple(range(1, d + 1))
    terms: dict = {}
    for s in elems:
        e = _permute_exponents(base, s)
        terms[e] = terms.get(e, 0) + 1
    return GroupInvariant.from_dict(d, terms, tuple(elems))


def difference_product(d: int) -> GroupInvariant:
    """prod_{i<j} (x_i - x_j), which belongs to A_d."""
    terms = {tuple([0] * d): 1}
    for i in range(d):
        for j in range(i + 1, d):
            new: dict = {}
            for e, c in terms.items():
                ei = list(e)
                ei[i] += 1
                ei = tuple(ei)
                new[ei] = new.get(ei, 0) + c
                ej = list(e)
                ej[j] += 1
                ej = tuple(ej)
                new[ej] = new.get(ej, 0) - c
            terms = new
    return GroupInvariant.from_dict(d, terms, "alternating")


def elementary_symmetric(d: int, k: int = 1) -> GroupInvariant:
    terms = {}
    for s in permutations(range(d), k):
        if list(s) == sorted(s):
            e = [0] * d
            for i in s:
                e[i] = 1
            terms[tuple(e)] = 1
    return GroupInvariant.from_dict(d, terms, "symmetric")


def stabilizer(f: GroupInvariant) -> list:
    """All s in S_d fixing f (brute force)."""
    return [s for s in permutations(range(f.arity)) if f.is_fixed_by(s)]


def coset_representatives(group, d: int) -> list:
    """One s per left coset s*G in S_d (the cosets along which s(F) varies)."""
    g = [tuple(x) for x in group]
    seen = set()
    reps = []
    for s in permutations(range(d)):
        if s in seen:
            continue
        reps.append(s)
        for h in g:
            seen.add(compose(s, h))
    return reps


@dataclass(frozen=True)
class ResolventPolynomial:
    source: IntPolynomial
    group: str
    resolvent: IntPolynomial
    coset_count: int
    precision: int = 0


class IntegerRootResult(NamedTuple):
    found: bool
    root: int | None
    simple: bool | None


def _check_input(p: IntPolynomial) -> int:
    if not p.is_monic():
        raise NotMonic("resolvents need a monic polynomial")
    if p.degree < 2:
        raise DegreeTooLow("resolvents need degree >= 2")
    disc = discriminant(p)
    if disc == 0:
        raise NotSquarefree(f"{p} has a repeated root")
    return disc


def alternating_resolvent(p: IntPolynomial) -> ResolventPolynomial:
    """Q_{A_d}(p) = x^2 - disc(p), from the difference-product invariant."""
    disc = _check_input(p)
    return ResolventPolynomial(p, "alternating", IntPolynomial((-disc, 0, 1)), 2)


def numeric_resolvent(p: IntPolynomial, f: GroupInvariant, cosets,
                      start: int = 64, ceiling: int = 1 << 16) -> ResolventPolynomial:
    """prod over coset representatives s of (x - s(F)(roots)), certified.

    Root enclosures and all arithmetic are carried in balls; precision doubles
    from `start` until each coefficient is pinned to a single integer, and
    PrecisionExhausted is raised past `ceiling`.
    """
    _check_input(p)
    d = p.degree
    if f.arity != d:
        raise ValueError(f"invariant has arity {f.arity}, polynomial degree {d}")
    cosets = [tuple(s) for s in cosets]
    if isinstance(f.group, tuple) and len(cosets) * len(f.group) != math.factorial(d):
        raise ValueError("coset count does not match the index of the group")

    def values(roots):
        return [f.evaluate_balls([roots[s[i]] for i in range(d)]) for s in cosets]

    poly, prec = certified_expansion(p, values, start=start, ceiling=ceiling)
    label = f.group if isinstance(f.group, str) else f"order-{len(f.group)}"
    return ResolventPolynomial(p, label, poly, len(cosets), prec)


def has_integer_root(q: IntPolynomial) -> IntegerRootResult:
    """Integer root of q, preferring the smallest nonnegative one."""
    if q.is_zero():
        raise ValueError("zero polynomial")
    roots = integer_roots(q)
    if not roots:
        return IntegerRootResult(False, None, None)
    nonneg = [z for z in roots if z >= 0]
    z = min(nonneg) if nonneg else max(roots)
    return IntegerRootResult(True, z, q.derivative()(z) != 0)
