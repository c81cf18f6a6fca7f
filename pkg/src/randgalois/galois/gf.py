"""Polynomials over Z/mZ as ascending coefficient lists.

Most routines assume m is an odd prime; the ring operations (`mul`,
`divmod_`, `sub`) also work modulo prime powers as long as divisors are monic.
The zero polynomial is ``[]``.
"""

from __future__ import annotations

import random


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, m: int) -> list:
    return trim([c % m for c in a])


def add(a: list, b: list, m: int) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return trim(out)


def sub(a: list, b: list, m: int) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return trim(out)


def mul(a: list, b: list, m: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % m for c in out])


def scale(a: list, c: int, m: int) -> list:
    return trim([x * c % m for x in a])


def divmod_(a: list, b: list, m: int):
    """Quotient and remainder; lc(b) must be invertible mod m."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    inv = pow(b[-1], -1, m)
    r = list(a)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % m
        if c:
            q[i - db] = c
            for j in range(db):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % m
        r[i] = 0
    return trim(q), trim(r[:db])


def rem(a: list, b: list, m: int) -> list:
    return divmod_(a, b, m)[1]


def monic(a: list, p: int) -> list:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a: list, b: list, p: int) -> list:
    a, b = reduce(a, p), reduce(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a: list, b: list, p: int):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = reduce(a, p), reduce(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(base: list, e: int, f: list, m: int) -> list:
    out = [1]
    base = rem(base, f, m)
    while e:
        if e & 1:
            out = rem(mul(out, base, m), f, m)
        e >>= 1
        if e:
            base = rem(mul(base, base, m), f, m)
    return out


def deriv(a: list, m: int) -> list:
    return trim([i * c % m for i, c in enumerate(a)][1:])


def evaluate(a: list, x: int, m: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % m
    return acc


def is_squarefree(f: list, p: int) -> bool:
    """True iff f (of degree >= 1 mod p) has no repeated factor over F_p."""
    f = reduce(f, p)
    df = deriv(f, p)
    if not df:
        return False
    return len(gcd(f, df, p)) == 1


def ddf(f: list, p: int) -> list:
    """Distinct-degree factorization of a monic squarefree f over F_p.

    Returns [(i, g_i)] where g_i is the product of all degree-i factors.
    """
    f = monic(reduce(f, p), p)
    out = []
    h = [0, 1]
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((i, g))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


def factor_degrees(f: list, p: int) -> list:
    """Degrees of the irreducible factors of a monic squarefree f, descending."""
    degs = []
    for i, g in ddf(f, p):
        degs += [i] * ((len(g) - 1) // i)
    return sorted(degs, reverse=True)


def edf(g: list, i: int, p: int, rng: random.Random) -> list:
    """Split g, a product of distinct monic degree-i irreducibles, (p odd)."""
    n = len(g) - 1
    if n == i:
        return [g]
    e = (p ** i - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = trim(a)
        if len(a) < 2:
            continue
        b = powmod(a, e, g, p)
        d = gcd(g, sub(b, [1], p), p)
        if 1 < len(d) < len(g):
            break
    other = divmod_(g, d, p)[0]
    return edf(d, i, p, rng) + edf(monic(other, p), i, p, rng)


def factor_squarefree(f: list, p: int, rng: random.Random | None = None) -> list:
    """Monic irreducible factors of a monic squarefree f over F_p (p odd)."""
    rng = rng or random.Random(p)
    out = []
    for i, g in ddf(f, p):
        out += edf(g, i, p, rng)
    return out


def roots(f: list, p: int, rng: random.Random | None = None) -> list:
    """Distinct roots in F_p of f (any f, via gcd with x^p - x)."""
    f = monic(reduce(f, p), p)
    if len(f) <= 1:
        return []
    if p < 64:
        return [r for r in range(p) if evaluate(f, r, p) == 0]
    lin = gcd(f, sub(powmod([0, 1], p, f, p), [0, 1], p), p)
    if len(lin) <= 1:
        return []
    rng = rng or random.Random(p)
    return sorted((-fac[0]) % p for fac in edf(lin, 1, p, rng))
