"""Dense integer polynomials with exact arithmetic.

Coefficients are stored in ascending order: ``coeffs[i]`` is the coefficient
of ``x**i``.  The zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeTooLow, NotMonic, ZeroPolynomial

__all__ = [
    "IntPolynomial",
    "resultant",
    "discriminant",
    "is_squarefree",
    "is_perfect_square",
    "poly_gcd",
    "content",
    "parse_poly",
    "format_poly",
]


def _strip(coeffs: Iterable[int]) -> tuple:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative exponent")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out, base = IntPolynomial((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; exact for integer (or Fraction) arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def scale_roots(self, s: int) -> "IntPolynomial":
        """Return s**deg * p(x / s), monic when p is, roots multiplied by s."""
        d = self.degree
        return IntPolynomial(c * s ** (d - i) for i, c in enumerate(self.coeffs))

    def reverse(self) -> "IntPolynomial":
        return IntPolynomial(reversed(self.coeffs))

    def compose_neg(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(-c if i & 1 else c for i, c in enumerate(self.coeffs))

    def divmod_monic(self, other: "IntPolynomial"):
        """Quotient and remainder by a divisor whose leading coefficient is +-1."""
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        lc = other.leading
        if lc not in (1, -1):
            raise ValueError("divisor leading coefficient must be a unit")
        r = list(self.coeffs)
        db = other.degree
        b = other.coeffs
        if len(r) - 1 < db:
            return IntPolynomial(), self
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * lc
            if c:
                q[i - db] = c
                for j in range(db + 1):
                    r[i - db + j] -= c * b[j]
        return IntPolynomial(q), IntPolynomial(r[:db])

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact division over Z; raises ArithmeticError if it does not divide."""
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db = other.degree
        lc = b[-1]
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("not divisible")
            return IntPolynomial()
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c, rem = divmod(r[i], lc)
            if rem:
                raise ArithmeticError("not divisible")
            if c:
                q[i - db] = c
                for j in range(db + 1):
                    r[i - db + j] -= c * b[j]
        if any(r[:db]):
            raise ArithmeticError("not divisible")
        return IntPolynomial(q)

    def divides(self, other: "IntPolynomial") -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def primitive(self) -> "IntPolynomial":
        c = content(self)
        if c == 0:
            return self
        if self.leading < 0:
            c = -c
        return IntPolynomial(a // c for a in self.coeffs)


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return IntPolynomial(x)


def content(p: IntPolynomial) -> int:
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
    return g


def _prem(a: Sequence[int], b: Sequence[int]) -> list:
    """Pseudo-remainder of lc(b)**(deg a - deg b + 1) * a by b (ascending lists)."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        r = [lc * x for x in r]
        if c:
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Resultant of p and q (the Sylvester determinant), via the subresultant PRS."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    a, b = list(p.coeffs), list(q.coeffs)
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, cb = content(p), content(q)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** db * cb ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da & 1 and db & 1:
            s = -1
    g = h = 1
    while True:
        delta = da - db
        if da & 1 and db & 1:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        da = db
        denom = g * h ** delta
        b = [x // denom for x in r]
        db = len(b) - 1
        g = a[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)
        if db == 0:
            h = b[0] ** da // h ** (da - 1)
            return s * t * h


def _disc_small(c: tuple) -> int:
    d = len(c) - 1
    if d == 2:
        e, b = c[0], c[1]
        return b * b - 4 * e
    if d == 3:
        e, dd, b = c[0], c[1], c[2]
        return (b * b * dd * dd - 4 * dd ** 3 - 4 * b ** 3 * e
                - 27 * e * e + 18 * b * dd * e)
    # monic quartic x^4 + b x^3 + c x^2 + d x + e
    e, dd, cc, b = c[0], c[1], c[2], c[3]
    b2, c2, d2, e2 = b * b, cc * cc, dd * dd, e * e
    return (256 * e2 * e - 192 * b * dd * e2 - 128 * c2 * e2 + 144 * cc * d2 * e
            - 27 * d2 * d2 + 144 * b2 * cc * e2 - 6 * b2 * d2 * e
            - 80 * b * c2 * dd * e + 18 * b * cc * d2 * dd + 16 * c2 * c2 * e
            - 4 * c2 * cc * d2 - 27 * b2 * b2 * e2 + 18 * b2 * b * cc * dd * e
            - 4 * b2 * b * d2 * dd - 4 * b2 * c2 * cc * e + b2 * c2 * d2)


def discriminant(p: IntPolynomial) -> int:
    """Discriminant of a monic polynomial of degree >= 2."""
    d = p.degree
    if d < 2:
        raise DegreeTooLow(f"discriminant needs degree >= 2, got {d}")
    if not p.is_monic():
        raise NotMonic("discriminant is only defined here for monic polynomials")
    if d <= 4:
        return _disc_small(p.coeffs)
    r = resultant(p, p.derivative())
    return -r if (d * (d - 1) // 2) & 1 else r


def discriminant_via_resultant(p: IntPolynomial) -> int:
    """Same as ``discriminant`` without the closed-form fast path."""
    d = p.degree
    if d < 2:
        raise DegreeTooLow(f"discriminant needs degree >= 2, got {d}")
    if not p.is_monic():
        raise NotMonic("discriminant is only defined here for monic polynomials")
    r = resultant(p, p.derivative())
    return -r if (d * (d - 1) // 2) & 1 else r


def is_squarefree(p: IntPolynomial) -> bool:
    if p.degree == 1:
        if not p.is_monic():
            raise NotMonic("expected a monic polynomial")
        return True
    return discriminant(p) != 0


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Z by the primitive PRS.

    The result is primitive with positive leading coefficient, times the gcd
    of the contents.
    """
    if p.is_zero():
        return q.primitive() * content(q) if not q.is_zero() else q
    if q.is_zero():
        return p.primitive() * content(p)
    g = math.gcd(content(p), content(q))
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = IntPolynomial(_prem(a.coeffs, b.coeffs))
        a, b = b, r.primitive()
    return a.primitive() * g


_SPLIT = re.compile(r"[\s,]+")


def parse_poly(text: str) -> IntPolynomial:
    """Parse ascending coefficients separated by whitespace or commas."""
    parts = [t for t in _SPLIT.split(text.strip()) if t]
    if not parts:
        raise ValueError("empty polynomial text")
    try:
        return IntPolynomial(int(t) for t in parts)
    except ValueError:
        raise ValueError(f"cannot parse polynomial coefficients: {text!r}") from None


def format_poly(p: IntPolynomial) -> str:
    return " ".join(str(c) for c in p.coeffs) if p.coeffs else "0"
