import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from randgalois.errors import DegreeTooLow, NotMonic, ZeroPolynomial
from randgalois.poly import (
    IntPolynomial as P,
    discriminant,
    format_poly,
    is_perfect_square,
    is_squarefree,
    parse_poly,
    poly_gcd,
    resultant,
)
from randgalois.poly import discriminant_via_resultant

from conftest import int_polys, monic_polys

X = sympy.Symbol("x")


def sylvester_det(p, q):
    """Determinant of the Sylvester matrix by exact Gaussian elimination."""
    m, n = p.degree, q.degree
    a = list(reversed(p.coeffs))
    b = list(reversed(q.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + a + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b + [0] * (size - n - 1 - i))
    mat = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if mat[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        for r in range(c + 1, size):
            f = mat[r][c] / mat[c][c]
            for j in range(c, size):
                mat[r][j] -= f * mat[c][j]
    assert det.denominator == 1
    return int(det)


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)), X)


class TestArithmetic:
    def test_evaluate_cubic(self):
        assert P([-1, -3, 0, 1])(2) == 1

    def test_zero_absorbs(self):
        assert (P([]) * P([1, 2, 3])).is_zero()

    def test_derivative_of_constant(self):
        assert P([5]).derivative().is_zero()

    def test_normalization(self):
        assert P([1, 2, 0, 0]).coeffs == (1, 2)
        assert P([0, 0]).degree == -1
        assert P([3, 0, 1]).is_monic() and not P([3, 2]).is_monic()

    @given(int_polys(), int_polys())
    def test_mul_degree(self, p, q):
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree == p.degree + q.degree

    @given(int_polys(), int_polys(), st.integers(-50, 50))
    def test_ring_homomorphism_at_points(self, p, q, x):
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)

    @given(int_polys())
    def test_derivative_matches_sympy(self, p):
        want = sympy.diff(to_sympy(p).as_expr(), X) if not p.is_zero() else 0
        got = sum(c * X ** i for i, c in enumerate(p.derivative().coeffs))
        assert sympy.expand(want - got) == 0


class TestResultant:
    def test_linear(self):
        assert resultant(P([-2, 1]), P([-5, 1])) == -3

    def test_self(self):
        p = P([1, 2, 3, 1])
        assert resultant(p, p) == 0

    def test_quadratics(self):
        assert resultant(P([1, 0, 1]), P([-2, 0, 1])) == 9

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            resultant(P([]), P([1, 1]))
        with pytest.raises(ZeroPolynomial):
            resultant(P([1, 1]), P([0]))

    @settings(max_examples=150)
    @given(int_polys(max_degree=5, bound=9, min_degree=1), int_polys(max_degree=5, bound=9, min_degree=1))
    def test_matches_sylvester(self, p, q):
        if p.degree >= 1 and q.degree >= 1:
            assert resultant(p, q) == sylvester_det(p, q)

    @given(int_polys(max_degree=4, bound=9, min_degree=1), int_polys(max_degree=4, bound=9, min_degree=1))
    def test_antisymmetry(self, p, q):
        if p.is_zero() or q.is_zero():
            return
        assert resultant(p, q) == (-1) ** (p.degree * q.degree) * resultant(q, p)

    @given(int_polys(max_degree=3, bound=9, min_degree=1), int_polys(max_degree=3, bound=9, min_degree=1),
           int_polys(max_degree=3, bound=9, min_degree=1))
    def test_multiplicative(self, p, q, r):
        if p.is_zero() or q.is_zero() or r.is_zero():
            return
        assert resultant(p * q, r) == resultant(p, r) * resultant(q, r)


class TestDiscriminant:
    def test_examples(self):
        assert discriminant(P([-2, 0, 1])) == 8
        assert discriminant(P([-1, -3, 0, 1])) == 81
        assert discriminant(P([1, -2, 1])) == 0

    def test_errors(self):
        with pytest.raises(DegreeTooLow):
            discriminant(P([1, 1]))
        with pytest.raises(NotMonic):
            discriminant(P([1, 0, 2]))

    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_quadratic_oracle(self, b, c):
        assert discriminant(P([c, b, 1])) == b * b - 4 * c

    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_depressed_cubic_oracle(self, p, q):
        assert discriminant(P([q, p, 0, 1])) == -4 * p ** 3 - 27 * q ** 2

    @settings(max_examples=150)
    @given(monic_polys(2, 8, 9))
    def test_matches_sympy_and_general_path(self, p):
        d = discriminant(p)
        assert d == discriminant_via_resultant(p)
        assert d == int(sympy.discriminant(to_sympy(p)))

    @settings(max_examples=150)
    @given(monic_polys(2, 8, 4))
    def test_zero_iff_common_factor_with_derivative(self, p):
        g = poly_gcd(p, p.derivative())
        assert (discriminant(p) == 0) == (g.degree >= 1)
        assert is_squarefree(p) == (discriminant(p) != 0)

    def test_squarefree_examples(self):
        assert is_squarefree(P([-2, 0, 1]))
        assert not is_squarefree(P([1, -2, 1]))
        assert is_squarefree(P([-1, -3, 0, 1]))

    def test_binomial_family(self):
        # disc(x^n + a) = (-1)^(n(n-1)/2) n^n a^(n-1)
        for n in range(2, 9):
            for a in (-3, -1, 2, 5):
                want = (-1) ** (n * (n - 1) // 2) * n ** n * a ** (n - 1)
                assert discriminant(P([a] + [0] * (n - 1) + [1])) == want


class TestSquares:
    def test_examples(self):
        assert is_perfect_square(81)
        assert not is_perfect_square(8)
        assert is_perfect_square(0)
        assert not is_perfect_square(-4)

    def test_exhaustive(self):
        squares = {m * m for m in range(0, 1001)}
        for n in range(-1000, 10 ** 6 + 1, 7):
            assert is_perfect_square(n) == (n in squares)
        for n in squares:
            assert is_perfect_square(n)
            if n > 1:
                assert not is_perfect_square(n - 1)

    def test_large(self):
        big = 3 ** 400
        assert is_perfect_square(big * big)
        assert not is_perfect_square(big * big + 1)


class TestText:
    def test_parse(self):
        assert parse_poly("-1 -3 0 1") == P([-1, -3, 0, 1])
        assert parse_poly("+1, 2,  +3") == P([1, 2, 3])

    def test_roundtrip(self):
        p = P([-1, -3, 0, 1])
        assert parse_poly(format_poly(p)) == p
        assert format_poly(P([])) == "0"

    def test_bad_text(self):
        with pytest.raises(ValueError):
            parse_poly("1 x 2")

    @given(int_polys(max_degree=10, bound=10 ** 30))
    def test_roundtrip_property(self, p):
        assert parse_poly(format_poly(p)) == p
