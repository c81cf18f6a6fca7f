"""Companion matrices, compound (exterior power) matrices and the resolvents p_k.

The k-th wedge resolvent of a monic polynomial p of degree d is the
characteristic polynomial of the k-th exterior power of its companion matrix.
Its roots are the products of the k-element subsets of the roots of p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .arith import crt_pair, large_primes, symmetric_mod
from .errors import BadK, NotMonic, NotSquarefree
from .poly import IntPolynomial, discriminant

__all__ = [
    "IntegerMatrix",
    "WedgeResolvent",
    "companion_matrix",
    "exterior_power",
    "char_poly",
    "wedge_resolvent",
    "power_sums",
    "constant_term_sign",
]

BERKOWITZ_MAX_DIM = 24


class IntegerMatrix:
    """Immutable square matrix of Python integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("IntegerMatrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values) -> "IntegerMatrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self.rows]})"

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        cols = list(zip(*other.rows))
        return IntegerMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols]
                              for r in self.rows])

    def submatrix(self, rows, cols) -> list:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def det(self) -> int:
        return _det([list(r) for r in self.rows])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def max_row_sum(self) -> int:
        return max(sum(abs(v) for v in r) for r in self.rows)


def _det(a: list) -> int:
    """Fraction-free (Bareiss) determinant; destroys `a`."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def companion_matrix(p: IntPolynomial) -> IntegerMatrix:
    """Companion matrix: ones on the subdiagonal, last column -a_0 .. -a_{d-1}."""
    if not p.is_monic():
        raise NotMonic("companion matrix needs a monic polynomial")
    d = p.degree
    if d < 1:
        raise ValueError("companion matrix needs degree >= 1")
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -p.coeffs[i]
    return IntegerMatrix(rows)


def exterior_power(m: IntegerMatrix, k: int) -> IntegerMatrix:
    """k-th compound matrix; rows and columns indexed by lexicographic k-subsets."""
    n = m.dim
    if not 1 <= k <= n:
        raise BadK(f"k must satisfy 1 <= k <= {n}, got {k}")
    if k == 1:
        return m
    subsets = list(combinations(range(n), k))
    rows = m.rows
    out = []
    for s in subsets:
        picked = [rows[i] for i in s]
        out.append([_det([[r[j] for j in t] for r in picked]) for t in subsets])
    return IntegerMatrix(out)


def _berkowitz(a: list) -> list:
    """Char poly coefficients, descending, division free."""
    n = len(a)
    vect = [1, -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        t = [1, -a[r][r]]
        v = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            new.append(sum(t[i - j] * vect[j] for j in range(min(i, r) + 1)))
        vect = new
    return vect


def _charpoly_mod(a: list, prime: int) -> list:
    """Char poly mod prime via Hessenberg reduction, ascending coefficients."""
    n = len(a)
    h = [[v % prime for v in r] for r in a]
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if h[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for r in h:
                r[piv], r[j + 1] = r[j + 1], r[piv]
        inv = pow(h[j + 1][j], -1, prime)
        for k in range(j + 2, n):
            u = h[k][j] * inv % prime
            if u:
                rk, rj = h[k], h[j + 1]
                for c in range(n):
                    rk[c] = (rk[c] - u * rj[c]) % prime
                for r in h:
                    r[j + 1] = (r[j + 1] + u * r[k]) % prime
    polys = [[1]]
    for m in range(1, n + 1):
        c = m - 1
        prev = polys[m - 1]
        cur = [0] + prev
        for i, v in enumerate(prev):
            cur[i] = (cur[i] - h[c][c] * v) % prime
        t = 1
        for i in range(1, m):
            t = t * h[c - i + 1][c - i] % prime
            if not t:
                break
            coef = t * h[c - i][c] % prime
            if coef:
                for idx, v in enumerate(polys[m - i - 1]):
                    cur[idx] = (cur[idx] - coef * v) % prime
        polys.append(cur)
    return polys[n]


def char_poly(m: IntegerMatrix, method: str = "auto") -> IntPolynomial:
    """Monic det(xI - M), exactly.

    Berkowitz's division-free algorithm for small matrices; above
    BERKOWITZ_MAX_DIM, Hessenberg reduction modulo enough 62-bit primes to
    exceed the Gershgorin coefficient bound, combined by CRT.
    """
    a = [list(r) for r in m.rows]
    n = m.dim
    if method == "auto":
        method = "berkowitz" if n <= BERKOWITZ_MAX_DIM else "modular"
    if method == "berkowitz":
        return IntPolynomial(reversed(_berkowitz(a)))
    if method != "modular":
        raise ValueError(f"unknown char_poly method {method!r}")
    bound = 2 * (1 + m.max_row_sum()) ** n + 1
    primes = large_primes(62, bound.bit_length() // 61 + 2)
    residues = None
    modulus = 1
    for q in primes:
        cp = _charpoly_mod(a, q)
        if residues is None:
            residues = cp
        else:
            residues = [crt_pair(r, modulus, c, q)[0] for r, c in zip(residues, cp)]
        modulus *= q
        if modulus > bound:
            break
    return IntPolynomial(symmetric_mod(r, modulus) for r in residues)


def power_sums(p: IntPolynomial, count: int) -> list:
    """[P_0, P_1, ..., P_count]: power sums of the roots of monic p (Newton)."""
    d = p.degree
    s = [p.coeffs[d - j] for j in range(1, d + 1)]  # s_j = a_{d-j}
    out = [d]
    for j in range(1, count + 1):
        acc = j * s[j - 1] if j <= d else 0
        for i in range(1, min(j - 1, d) + 1):
            acc += s[i - 1] * out[j - i]
        out.append(-acc)
    return out


def _from_power_sums(sums: list, n: int) -> IntPolynomial:
    """Monic polynomial of degree n whose roots have power sums sums[1..n]."""
    e = [1]
    for t in range(1, n + 1):
        acc = 0
        for i in range(1, t + 1):
            term = e[t - i] * sums[i]
            acc += term if i & 1 else -term
        q, r = divmod(acc, t)
        if r:
            raise ArithmeticError("power sums are not those of an integer polynomial")
        e.append(q)
    coeffs = [(-1) ** t * e[t] for t in range(n + 1)]
    return IntPolynomial(reversed(coeffs))


def _elementary_from_power_sums(sums: list, k: int) -> int:
    e = [1]
    for t in range(1, k + 1):
        acc = 0
        for i in range(1, t + 1):
            term = e[t - i] * sums[i]
            acc += term if i & 1 else -term
        e.append(acc // t)
    return e[k]


def _wedge_newton(p: IntPolynomial, k: int) -> IntPolynomial:
    d = p.degree
    n = math.comb(d, k)
    ps = power_sums(p, k * n)
    sums = [n]
    for m in range(1, n + 1):
        sums.append(_elementary_from_power_sums(
            [d] + [ps[t * m] for t in range(1, k + 1)], k))
    return _from_power_sums(sums, n)


@dataclass(frozen=True)
class WedgeResolvent:
    source: IntPolynomial
    k: int
    resolvent: IntPolynomial

    @property
    def degree(self) -> int:
        return self.resolvent.degree


def wedge_resolvent(p: IntPolynomial, k: int, method: str = "newton",
                    check_squarefree: bool = True) -> WedgeResolvent:
    """p_k = char_poly(exterior_power(companion_matrix(p), k)).

    method="newton" computes the same polynomial from power sums of p, which
    is much faster for large binomial(d, k); method="matrix" builds the
    compound matrix explicitly.
    """
    if not p.is_monic():
        raise NotMonic("wedge resolvent needs a monic polynomial")
    d = p.degree
    if not 1 <= k <= d:
        raise BadK(f"k must satisfy 1 <= k <= {d}, got {k}")
    if check_squarefree and d >= 2 and discriminant(p) == 0:
        raise NotSquarefree(f"{p} has a repeated root")
    if k == 1:
        return WedgeResolvent(p, k, p)
    if method == "newton":
        res = _wedge_newton(p, k)
    elif method == "matrix":
        res = char_poly(exterior_power(companion_matrix(p), k))
    else:
        raise ValueError(f"unknown method {method!r}")
    return WedgeResolvent(p, k, res)


def constant_term_sign(d: int, k: int, a0: int) -> int:
    """Sign of p_k(0), from p_k(0) = (-1)**C(d,k) * ((-1)**d * a0)**C(d-1,k-1)."""
    if a0 == 0:
        return 0
    e = math.comb(d - 1, k - 1)
    sign = -1 if math.comb(d, k) & 1 else 1
    if (d & 1) ^ (a0 < 0):
        sign = -sign if e & 1 else sign
    return sign
