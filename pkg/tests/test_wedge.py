import math
import random
from itertools import combinations, permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from randgalois.errors import BadK, NotMonic, NotSquarefree
from randgalois.poly import IntPolynomial as P
from randgalois.wedge import (
    IntegerMatrix,
    char_poly,
    companion_matrix,
    constant_term_sign,
    exterior_power,
    wedge_resolvent,
)

from conftest import random_monic


def perm_sign(s):
    inv = sum(1 for i, j in combinations(range(len(s)), 2) if s[i] > s[j])
    return -1 if inv & 1 else 1


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for s in permutations(range(n)):
        term = perm_sign(s)
        for i in range(n):
            term *= rows[i][s[i]]
        total += term
    return total


def char_poly_cofactor(m: IntegerMatrix) -> P:
    """det(xI - M) expanded symbolically via sympy cofactor expansion."""
    x = sympy.Symbol("x")
    n = m.dim
    mat = sympy.Matrix(n, n, lambda i, j: (x if i == j else 0) - m[i, j])
    poly = sympy.Poly(mat.det(method="berkowitz").expand(), x)
    return P([int(c) for c in reversed(poly.all_coeffs())])


def small_matrix(rng, n, lo=-5, hi=5):
    return IntegerMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


class TestCompanion:
    def test_quadratic(self):
        assert companion_matrix(P([7, 3, 1])).rows == ((0, -7), (1, -3))

    def test_linear(self):
        assert companion_matrix(P([-4, 1])).rows == ((4,),)

    def test_roundtrip(self):
        p = P([-1, -3, 0, 1])
        assert char_poly(companion_matrix(p)) == p

    def test_not_monic(self):
        with pytest.raises(NotMonic):
            companion_matrix(P([1, 2]))

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=12))
    def test_roundtrip_property(self, c):
        p = P(c + [1])
        assert char_poly(companion_matrix(p)) == p


class TestExteriorPower:
    def test_top_power_is_det(self, rng):
        m = small_matrix(rng, 4)
        assert exterior_power(m, 4).rows == ((leibniz_det(m.rows),),)

    def test_first_power(self, rng):
        m = small_matrix(rng, 3)
        assert exterior_power(m, 1) == m

    def test_diagonal(self):
        assert exterior_power(IntegerMatrix.diag([2, 3, 5]), 2) == IntegerMatrix.diag([6, 10, 15])

    def test_bad_k(self):
        m = IntegerMatrix.identity(3)
        for k in (0, 4, -1):
            with pytest.raises(BadK):
                exterior_power(m, k)

    def test_entries_are_minors(self, rng):
        m = small_matrix(rng, 5)
        e = exterior_power(m, 3)
        subsets = list(combinations(range(5), 3))
        for a, s in enumerate(subsets):
            for b, t in enumerate(subsets):
                assert e[a, b] == leibniz_det(m.submatrix(s, t))

    def test_cauchy_binet(self, rng):
        for _ in range(20):
            n = rng.randint(2, 5)
            a, b = small_matrix(rng, n), small_matrix(rng, n)
            for k in range(1, n + 1):
                assert exterior_power(a @ b, k) == exterior_power(a, k) @ exterior_power(b, k)


class TestCharPoly:
    def test_identity(self):
        assert char_poly(IntegerMatrix.identity(2)) == P([1, -2, 1])

    def test_companion_2x2(self):
        assert char_poly(IntegerMatrix([[0, -7], [1, -3]])) == P([7, 3, 1])

    def test_random_4x4_cofactor(self, rng):
        for _ in range(25):
            m = small_matrix(rng, 4)
            assert char_poly(m) == char_poly_cofactor(m)

    def test_modular_route_agrees(self, rng):
        for n in (3, 6, 10):
            for _ in range(5):
                m = small_matrix(rng, n, -20, 20)
                assert char_poly(m, "modular") == char_poly(m, "berkowitz")

    def test_large_dimension_uses_modular(self, rng):
        m = small_matrix(rng, 30, -3, 3)
        cp = char_poly(m)
        assert cp.degree == 30 and cp.is_monic()
        assert -cp.coeffs[29] == m.trace()


class TestWedgeResolvent:
    def test_k1_identity(self):
        p = P([-1, -3, 0, 1])
        assert wedge_resolvent(p, 1).resolvent == p

    def test_quadratic_vieta(self):
        assert wedge_resolvent(P([5, 3, 1]), 2).resolvent == P([-5, 1])

    def test_cube_roots_of_unity(self):
        assert wedge_resolvent(P([-1, 0, 0, 1]), 2).resolvent == P([-1, 0, 0, 1])

    def test_errors(self):
        with pytest.raises(NotSquarefree):
            wedge_resolvent(P([1, -2, 1]), 1)
        with pytest.raises(NotMonic):
            wedge_resolvent(P([1, 1, 2]), 1)
        with pytest.raises(BadK):
            wedge_resolvent(P([-2, 0, 1]), 3)

    def test_degree_and_monic(self, rng):
        for d in range(2, 9):
            for _ in range(4):
                p = random_monic(rng, d)
                for k in range(1, d + 1):
                    r = wedge_resolvent(p, k)
                    assert r.degree == math.comb(d, k)
                    assert r.resolvent.is_monic()

    def test_matrix_and_newton_routes_agree(self, rng):
        for d in range(2, 7):
            for _ in range(5):
                p = random_monic(rng, d)
                for k in range(1, d + 1):
                    assert (wedge_resolvent(p, k, "matrix").resolvent
                            == wedge_resolvent(p, k, "newton").resolvent)

    def test_integer_roots_products(self, rng):
        # exact oracle: integer roots give integer subset products
        for _ in range(30):
            roots = rng.sample(range(-7, 8), rng.randint(2, 6))
            p = P.from_roots(roots)
            k = rng.randint(1, len(roots))
            prods = [math.prod(s) for s in combinations(roots, k)]
            assert wedge_resolvent(p, k).resolvent == P.from_roots(prods)

    def test_constant_term_identity(self, rng):
        for d in range(2, 9):
            for _ in range(20):
                p = random_monic(rng, d)
                a0 = p.coeffs[0]
                for k in range(1, d + 1):
                    c = wedge_resolvent(p, k).resolvent.coeffs[0]
                    e = math.comb(d, k) * k // d
                    assert abs(c) == abs(a0) ** e
                    assert (c > 0) - (c < 0) == constant_term_sign(d, k, a0)

    def test_binomial_14_6_worst_case(self):
        p = P([3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8, 9, 7, 1])
        r = wedge_resolvent(p, 6)
        assert r.degree == 3003
        e = math.comb(14, 6) * 6 // 14
        assert abs(r.resolvent.coeffs[0]) == 3 ** e
