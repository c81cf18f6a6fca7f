import random
from itertools import combinations

import mpmath
import pytest

from randgalois.balls import Ball, certified_expansion, numeric_subset_product_poly, root_balls
from randgalois.poly import IntPolynomial as P
from randgalois.wedge import wedge_resolvent

from conftest import random_monic


def test_ball_contains_exact_product():
    prec = 80
    a = Ball.from_complex(mpmath.mpc(1.25, -0.5), prec)
    b = Ball.from_complex(mpmath.mpc(-3.5, 2.0), prec)
    c = a * b
    want = complex(1.25, -0.5) * complex(-3.5, 2.0)
    s = 2.0 ** -prec
    assert abs(complex(c.re * s, c.im * s) - want) <= (c.rad + 1) * s


def test_root_balls_contain_roots(rng):
    for _ in range(20):
        p = random_monic(rng, rng.randint(2, 7))
        balls = root_balls(p, 96)
        with mpmath.workprec(300):
            exact = mpmath.polyroots(list(reversed(p.coeffs)), maxsteps=200, extraprec=300)
            for z in exact:
                hits = 0
                for b in balls:
                    c = mpmath.mpc(b.re, b.im) / mpmath.mpf(2) ** b.prec
                    if abs(z - c) <= mpmath.mpf(b.rad) / mpmath.mpf(2) ** b.prec:
                        hits += 1
                assert hits == 1


def test_nearest_integer_refuses_wide_balls():
    assert Ball(5 << 10, 0, 1 << 9, 10).nearest_integer() is None
    assert Ball((5 << 10) + 3, 0, 100, 10).nearest_integer() == 5


def test_subset_products_match_exact(rng):
    for d in range(2, 6):
        for _ in range(6):
            p = random_monic(rng, d)
            for k in range(1, min(d, 3) + 1):
                assert numeric_subset_product_poly(p, k) == wedge_resolvent(p, k).resolvent


def test_start_precision_does_not_change_result(rng):
    for _ in range(10):
        p = random_monic(rng, 5)
        a = numeric_subset_product_poly(p, 2, start=64)
        b = numeric_subset_product_poly(p, 2, start=512)
        assert a == b


def test_precision_doubles_when_needed():
    # large coefficients need more than 64 bits before rounding certifies
    p = P([10 ** 12 + 39, -(10 ** 9), 7, 1])
    poly, prec = certified_expansion(p, lambda rs: [a * b for a, b in combinations(rs, 2)])
    assert prec > 64
    assert poly == wedge_resolvent(p, 2).resolvent
