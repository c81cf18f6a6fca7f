"""Divisor functions and their averages.

tau(n) counts divisors, tau_k(n) = tau(n**k).  Averages are computed with the
Dirichlet hyperbola identity, a smallest-prime-factor sieve, and a sieve over
polynomial values P(n) driven by the roots of P modulo each prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import RHO_ROUNDS, factorint, small_primes
from .errors import FactorBudgetExceeded
from .galois import gf
from .poly import IntPolynomial

EULER_GAMMA = 0.5772156649015329

__all__ = [
    "DivisorSample",
    "VdcResult",
    "tau",
    "tau_k",
    "divisor_summatory",
    "hyperbola_average",
    "tau_k_table",
    "tau_k_average",
    "tau_of_values",
    "vdc_moment",
]


@dataclass
class DivisorSample:
    x: int
    mean: float
    predicted: float
    ratio: float
    total: int | None = None
    extra: dict = field(default_factory=dict)

    def to_row(self) -> dict:
        return {"x": self.x, "mean": self.mean, "predicted": self.predicted,
                "ratio": self.ratio}


def tau(n: int, rho_rounds: int = RHO_ROUNDS) -> int:
    if n < 1:
        raise ValueError("tau is defined for n >= 1")
    return math.prod(e + 1 for e in factorint(n, rho_rounds).values())


def tau_k(n: int, k: int, rho_rounds: int = RHO_ROUNDS) -> int:
    """Number of divisors of n**k, without forming n**k."""
    if n < 1 or k < 1:
        raise ValueError("tau_k needs n >= 1 and k >= 1")
    return math.prod(k * e + 1 for e in factorint(n, rho_rounds).values())


def divisor_summatory(m: int) -> int:
    """sum_{n <= m} tau(n) = 2 * sum_{n <= sqrt m} floor(m/n) - floor(sqrt m)**2."""
    if m < 1:
        return 0
    r = math.isqrt(m)
    return 2 * sum(m // n for n in range(1, r + 1)) - r * r


def hyperbola_average(x: int) -> DivisorSample:
    """(1/x) sum_{n < x} tau(n), compared with log x."""
    if x < 2:
        raise ValueError("x must be >= 2")
    total = divisor_summatory(x - 1)
    mean = total / x
    lx = math.log(x)
    refined = lx + 2 * EULER_GAMMA - 1
    return DivisorSample(x, mean, lx, mean / lx, total,
                         {"refined": refined, "refined_ratio": mean / refined})


def _spf_table(x: int) -> np.ndarray:
    spf = np.zeros(x + 1, dtype=np.int64)
    for p in range(2, math.isqrt(x) + 1):
        if spf[p] == 0:
            block = spf[p * p::p]
            block[block == 0] = p
    idx = np.nonzero(spf == 0)[0]
    spf[idx] = idx
    return spf


def tau_k_table(x: int, k: int) -> np.ndarray:
    """Array t with t[n] = tau_k(n) for 1 <= n <= x (t[0] unused).

    Each n is split as spf(n)**e * rest; all dependencies of n lie below n/2,
    so the recurrence is evaluated one dyadic block at a time.
    """
    if x > 10 ** 8:
        raise MemoryError("sieve table limited to x <= 1e8")
    spf = _spf_table(x)
    expo = np.zeros(x + 1, dtype=np.int64)
    rest = np.ones(x + 1, dtype=np.int64)
    t = np.ones(x + 1, dtype=np.int64)
    lo = 2
    while lo <= x:
        hi = min(2 * lo, x + 1)
        n = np.arange(lo, hi, dtype=np.int64)
        p = spf[lo:hi]
        m = n // p
        same = spf[m] == p
        same[m == 1] = False
        e = np.where(same, expo[m] + 1, 1)
        r = np.where(same, rest[m], m)
        expo[lo:hi] = e
        rest[lo:hi] = r
        t[lo:hi] = t[r] * (k * e + 1)
        lo = hi
    return t


def tau_k_average(x: int, k: int) -> DivisorSample:
    """(1/x) sum_{n <= x} tau_k(n), compared with log(x)**k.

    The ratio against log(x)**(k+1) is kept in `extra` as the second
    candidate normalization.
    """
    if x < 2:
        raise ValueError("x must be >= 2")
    if not 1 <= k <= 6:
        raise ValueError("k must be in 1..6")
    total = int(tau_k_table(x, k)[1:].sum())
    mean = total / x
    lx = math.log(x)
    pred = lx ** k
    return DivisorSample(x, mean, pred, mean / pred, total,
                         {"predicted_k_plus_1": lx ** (k + 1),
                          "ratio_k_plus_1": mean / lx ** (k + 1)})


def _values_int64(poly: IntPolynomial, x: int):
    if sum(abs(c) for c in poly.coeffs) * max(x, 1) ** max(poly.degree, 0) >= 1 << 62:
        return None
    n = np.arange(1, x + 1, dtype=np.int64)
    v = np.zeros(x, dtype=np.int64)
    for c in reversed(poly.coeffs):
        v = v * n + c
    return np.abs(v)


def tau_of_values(poly: IntPolynomial, x: int, rho_rounds: int = RHO_ROUNDS):
    """(tau(|P(n)|) for n = 1..x, number of skipped n).

    Skipped entries (factorization over budget) are returned as 0.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    vals = _values_int64(poly, x)
    if vals is None:
        return _tau_values_slow(poly, x, rho_rounds)
    if np.any(vals == 0):
        raise ValueError("P vanishes at a positive integer in range")
    cof = vals.copy()
    t = np.ones(x, dtype=np.int64)
    limit = math.isqrt(int(vals.max()))
    coeffs = list(poly.coeffs)
    for q in small_primes(limit):
        for r in gf.roots(coeffs, q):
            # n = 1..x stored at index n-1; n = r (mod q)
            first = (r - 1) % q
            if first >= x:
                continue
            sub = cof[first::q]
            e = np.zeros(sub.shape, dtype=np.int64)
            hit = sub % q == 0
            while hit.any():
                sub = np.where(hit, sub // q, sub)
                e += hit
                hit = sub % q == 0
            cof[first::q] = sub
            t[first::q] *= e + 1
    t[cof > 1] *= 2
    return t, 0


def _tau_values_slow(poly, x, rho_rounds):
    out = np.zeros(x, dtype=object)
    skipped = 0
    for n in range(1, x + 1):
        v = abs(poly(n))
        if v == 0:
            raise ValueError("P vanishes at a positive integer in range")
        try:
            out[n - 1] = tau(v, rho_rounds)
        except FactorBudgetExceeded:
            skipped += 1
    return out, skipped


@dataclass
class VdcResult:
    samples: list
    exponent: float
    intercept: float
    s: int
    skipped: int


def vdc_moment(poly: IntPolynomial, s: int, x_grid, rho_rounds: int = RHO_ROUNDS) -> VdcResult:
    """Mean of tau(P(n))**s over n <= x on a grid; slope of log mean vs log log x."""
    if not poly.is_monic():
        raise ValueError("P must be monic")
    if s not in (0, 1, 2, 3):
        raise ValueError("s must be in 0..3")
    grid = sorted(int(v) for v in np.atleast_1d(x_grid))
    if grid[0] < 3:
        raise ValueError("grid values must be >= 3")
    t, skipped = tau_of_values(poly, grid[-1], rho_rounds)
    good = t != 0
    powered = np.array([int(v) ** s if g else 0 for v, g in zip(t, good)], dtype=object) \
        if t.dtype == object else np.where(good, t.astype(np.float64) ** s, 0.0)
    csum = np.cumsum(powered)
    ccount = np.cumsum(good)
    samples = []
    for x in grid:
        mean = float(csum[x - 1]) / int(ccount[x - 1])
        lx = math.log(x)
        samples.append(DivisorSample(x, mean, lx, mean / lx))
    if len(grid) >= 2:
        ll = np.log(np.log(np.array(grid, dtype=float)))
        lm = np.log(np.array([smp.mean for smp in samples]))
        slope, icpt = np.polyfit(ll, lm, 1)
    else:
        slope, icpt = float("nan"), float("nan")
    return VdcResult(samples, float(slope), float(icpt), s, skipped)
