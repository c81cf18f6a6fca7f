import random

import pytest
from hypothesis import strategies as st

from randgalois.poly import IntPolynomial, discriminant


def random_monic(rng, d, lo=-9, hi=9, squarefree=True):
    while True:
        p = IntPolynomial([rng.randint(lo, hi) for _ in range(d)] + [1])
        if not squarefree or d < 2 or discriminant(p) != 0:
            return p


@pytest.fixture
def rng():
    return random.Random(20240611)


def int_polys(max_degree=6, bound=20, min_degree=0):
    return st.lists(st.integers(-bound, bound), min_size=min_degree + 1,
                    max_size=max_degree + 1).map(IntPolynomial)


def monic_polys(min_degree=1, max_degree=6, bound=20):
    return st.integers(min_degree, max_degree).flatmap(
        lambda d: st.lists(st.integers(-bound, bound), min_size=d, max_size=d)
        .map(lambda c: IntPolynomial(c + [1])))


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """record(number, ok, detail) stores the outcome and asserts it."""

    def record(number, ok, detail=""):
        ACCEPTANCE_RESULTS[number] = (bool(ok), detail)
        assert ok, f"criterion {number} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"AC{number:<2} {'PASS' if ok else 'FAIL'}  {detail}")
