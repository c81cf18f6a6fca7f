"""Integer helpers: prime generation, primality, factorization, divisors."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import count

from .errors import FactorBudgetExceeded

TRIAL_LIMIT = 10_000
RHO_ROUNDS = 1 << 18

# Deterministic Miller-Rabin bases: correct for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def small_primes(limit: int) -> list:
    """Primes <= limit by the sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, v in enumerate(sieve) if v]


_TRIAL = small_primes(TRIAL_LIMIT)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _TRIAL[:25]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int):
    """Yield the primes > start in increasing order."""
    for n in count(start + 1):
        if is_prime(n):
            yield n


@lru_cache(maxsize=64)
def primes_above(start: int, how_many: int) -> tuple:
    gen = primes_from(start)
    return tuple(next(gen) for _ in range(how_many))


def _rho(n: int, c: int, rounds: int) -> int:
    # Brent's cycle finding with batched gcds.
    y, r, q, g = 2, 1, 1, 1
    x = ys = 2
    m = 128
    spent = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r <<= 1
        spent += r
        if spent > rounds:
            return 0
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def factorint(n: int, rho_rounds: int = RHO_ROUNDS) -> dict:
    """Prime factorization {p: e} of |n| >= 1.

    Trial division up to TRIAL_LIMIT, then Pollard rho (Brent) with a bounded
    number of iterations per composite cofactor.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict = {}
    for p in _TRIAL:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < TRIAL_LIMIT * TRIAL_LIMIT or is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        for c in range(1, 20):
            g = _rho(m, c, rho_rounds)
            if g and g != m:
                stack += [g, m // g]
                break
        else:
            raise FactorBudgetExceeded(f"could not split {m} within budget")
    return out


def divisors(n: int, rho_rounds: int = RHO_ROUNDS) -> list:
    """Sorted positive divisors of |n|."""
    divs = [1]
    for p, e in factorint(n, rho_rounds).items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def crt_pair(r1: int, m1: int, r2: int, m2: int):
    """Combine x = r1 mod m1 and x = r2 mod m2 for coprime moduli."""
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t, m1 * m2


def symmetric_mod(a: int, m: int) -> int:
    a %= m
    return a - m if a > m // 2 else a


@lru_cache(maxsize=8)
def large_primes(bits: int, how_many: int) -> tuple:
    """The largest `how_many` primes below 2**bits."""
    out = []
    n = (1 << bits) - 1
    while len(out) < how_many:
        if is_prime(n):
            out.append(n)
        n -= 2
    return tuple(out)
