import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from randgalois.errors import InsufficientData
from randgalois.fitting import fit_decay

GRID = [10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5]


def test_log_power_roundtrip():
    f = fit_decay([(n, 5 * math.log(n) ** 2 / n) for n in GRID])
    assert abs(f.a - 2) < 0.1
    assert abs(f.C - 5) < 0.05


def test_constant_rows():
    assert abs(fit_decay([(n, 0.3) for n in GRID]).b) < 1e-9


def test_inverse_power():
    f = fit_decay([(n, 1 / n) for n in GRID])
    assert abs(f.b + 1) < 0.05


@given(st.floats(-3, 3), st.floats(0.01, 100))
def test_power_law_roundtrip(b, c):
    rows = [(n, min(1.0, c * n ** b)) for n in GRID]
    if any(f >= 1.0 for _, f in rows):
        return
    assert abs(fit_decay(rows).b - b) < 1e-6


def test_insufficient():
    with pytest.raises(InsufficientData) as info:
        fit_decay([(100, 0.1), (1000, 0.0), (10000, 0.01)])
    assert "1000" in str(info.value)


def test_residuals_reported():
    f = fit_decay([(n, 2 / n) for n in GRID])
    assert len(f.residuals_a) == len(f.residuals_b) == 4
    assert max(abs(r) for r in f.residuals_b) < 1e-9
