"""Certified complex ball arithmetic on dyadic centers.

A `Ball` is a complex disc with center (re + i*im) * 2**-prec and radius
rad * 2**-prec, all integers; radii are rigorous upper bounds.  Roots of a
monic integer polynomial are enclosed with Smith's inclusion theorem applied
to high-precision approximations, after which any polynomial expression in the
roots can be evaluated with a guaranteed error bound.
"""

from __future__ import annotations

import math
from itertools import combinations

import mpmath

from .errors import PrecisionExhausted
from .poly import IntPolynomial

START_PRECISION = 64
MAX_PRECISION = 1 << 16


class InsufficientPrecision(ArithmeticError):
    """Raised internally when a certification step needs more bits."""


def _ceil_shift(v: int, s: int) -> int:
    return -((-v) >> s)


class Ball:
    __slots__ = ("re", "im", "rad", "prec")

    def __init__(self, re: int, im: int, rad: int, prec: int):
        self.re = re
        self.im = im
        self.rad = rad
        self.prec = prec

    @classmethod
    def exact(cls, n: int, prec: int) -> "Ball":
        return cls(n << prec, 0, 0, prec)

    @classmethod
    def from_complex(cls, z, prec: int) -> "Ball":
        with mpmath.workprec(prec + 32):
            z = mpmath.mpc(z)
            re = int(mpmath.nint(mpmath.ldexp(z.real, prec)))
            im = int(mpmath.nint(mpmath.ldexp(z.imag, prec)))
        return cls(re, im, 0, prec)

    def __repr__(self):
        s = 2.0 ** -self.prec
        return f"Ball({self.re * s:.6g}{self.im * s:+.6g}j, rad={self.rad * s:.3g})"

    def __add__(self, o: "Ball") -> "Ball":
        return Ball(self.re + o.re, self.im + o.im, self.rad + o.rad, self.prec)

    def __sub__(self, o: "Ball") -> "Ball":
        return Ball(self.re - o.re, self.im - o.im, self.rad + o.rad, self.prec)

    def __neg__(self) -> "Ball":
        return Ball(-self.re, -self.im, self.rad, self.prec)

    def scale(self, n: int) -> "Ball":
        return Ball(self.re * n, self.im * n, self.rad * abs(n), self.prec)

    def mag_upper(self) -> int:
        """Upper bound on |center| in ulps."""
        return math.isqrt(self.re * self.re + self.im * self.im) + 1

    def abs_upper(self) -> int:
        return self.mag_upper() + self.rad

    def abs_lower(self) -> int:
        return math.isqrt(self.re * self.re + self.im * self.im) - self.rad

    def __mul__(self, o: "Ball") -> "Ball":
        p = self.prec
        re2 = self.re * o.re - self.im * o.im
        im2 = self.re * o.im + self.im * o.re
        rad = 0
        if self.rad or o.rad:
            rad = _ceil_shift(self.mag_upper() * o.rad + o.mag_upper() * self.rad
                              + self.rad * o.rad, p)
        return Ball(re2 >> p, im2 >> p, rad + 2, p)

    def __pow__(self, e: int) -> "Ball":
        out = Ball.exact(1, self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def nearest_integer(self):
        """The unique integer in the ball if rad < 1/2, else None.

        The true value is assumed real and integral; only the real part and
        the radius are consulted.
        """
        half = 1 << (self.prec - 1)
        if self.rad >= half:
            return None
        return (self.re + half) >> self.prec


def _approx_roots(p: IntPolynomial, prec: int) -> list:
    coeffs = list(reversed(p.coeffs))
    steps = 50 + 10 * p.degree
    with mpmath.workprec(prec + 32):
        for _ in range(6):
            try:
                return mpmath.polyroots(coeffs, maxsteps=steps, extraprec=prec)
            except mpmath.libmp.libhyper.NoConvergence:
                steps *= 4
    raise InsufficientPrecision("root approximation did not converge")


def _horner(p: IntPolynomial, z: Ball) -> Ball:
    acc = Ball.exact(0, z.prec)
    for c in reversed(p.coeffs):
        acc = acc * z + Ball.exact(c, z.prec)
    return acc


def root_balls(p: IntPolynomial, prec: int) -> list:
    """Disjoint balls, each containing exactly one root of monic squarefree p."""
    if not p.is_monic():
        raise ValueError("root_balls expects a monic polynomial")
    n = p.degree
    if n == 1:
        return [Ball.exact(-p.coeffs[0], prec)]
    centers = [Ball.from_complex(z, prec) for z in _approx_roots(p, prec)]
    radii = []
    for i, z in enumerate(centers):
        val = _horner(p, z)
        den = Ball.exact(1, prec)
        for j, w in enumerate(centers):
            if j != i:
                den = den * (z - w)
        lower = den.abs_lower()
        if lower <= 0:
            raise InsufficientPrecision("approximate roots are not separated")
        # |w_i| <= |p(z_i)| / |prod (z_i - z_j)|; Smith radius is n * |w_i|
        radii.append(-((-(n * val.abs_upper() << prec)) // lower))
    for i, j in combinations(range(n), 2):
        dr = centers[i].re - centers[j].re
        di = centers[i].im - centers[j].im
        if dr * dr + di * di <= (radii[i] + radii[j]) ** 2:
            raise InsufficientPrecision("root inclusion discs overlap")
    return [Ball(z.re, z.im, r, prec) for z, r in zip(centers, radii)]


def expand_linear_factors(values: list, prec: int) -> list:
    """Ball coefficients (ascending) of prod (x - v) over `values`."""
    coeffs = [Ball.exact(1, prec)]
    for v in values:
        nv = -v
        new = [None] * (len(coeffs) + 1)
        new[len(coeffs)] = coeffs[-1]
        for i in range(len(coeffs) - 1, 0, -1):
            new[i] = coeffs[i - 1] + coeffs[i] * nv
        new[0] = coeffs[0] * nv
        coeffs = new
    return coeffs


def round_to_integers(coeffs: list):
    """Integer coefficients if every ball certifies one, else None."""
    out = []
    for c in coeffs:
        v = c.nearest_integer()
        if v is None:
            return None
        out.append(v)
    return IntPolynomial(out)


def certified_expansion(p: IntPolynomial, values_from_roots, start: int = START_PRECISION,
                        ceiling: int = MAX_PRECISION):
    """Run `values_from_roots(root_balls) -> list[Ball]`, expand and round.

    Precision starts at `start` bits and doubles until every coefficient is
    certified; returns (polynomial, precision used).
    """
    prec = start
    while prec <= ceiling:
        try:
            roots = root_balls(p, prec)
            vals = values_from_roots(roots)
            poly = round_to_integers(expand_linear_factors(vals, prec))
        except InsufficientPrecision:
            poly = None
        if poly is not None:
            return poly, prec
        prec *= 2
    raise PrecisionExhausted(f"no certification below {ceiling} bits")


def numeric_subset_product_poly(p: IntPolynomial, k: int, **kw) -> IntPolynomial:
    """prod over k-subsets S of (x - prod_{i in S} r_i), from certified roots."""

    def products(roots):
        out = []
        for s in combinations(roots, k):
            acc = s[0]
            for b in s[1:]:
                acc = acc * b
            out.append(acc)
        return out

    return certified_expansion(p, products, **kw)[0]
