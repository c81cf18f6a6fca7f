"""Least-squares decay fits for census frequencies.

Two models per event:

    freq ~ C * (log N)**a / N      (slope in N clamped to -1)
    freq ~ C_b * N**b              (free slope)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientData

__all__ = ["DecayFit", "fit_decay"]


@dataclass
class DecayFit:
    C: float
    a: float
    residuals_a: list
    C_b: float
    b: float
    residuals_b: list
    n_values: list
    zero_count_n: list

    def to_json(self):
        return {
            "C": self.C,
            "a": self.a,
            "residuals_a": self.residuals_a,
            "C_b": self.C_b,
            "b": self.b,
            "residuals_b": self.residuals_b,
            "n_values": self.n_values,
            "zero_count_n": self.zero_count_n,
        }


def _line(x: np.ndarray, y: np.ndarray):
    slope, icpt = np.polyfit(x, y, 1)
    res = y - (icpt + slope * x)
    return float(icpt), float(slope), [float(r) for r in res]


def fit_decay(rows, min_points: int = 3) -> DecayFit:
    """Fit both decay models to (N, frequency) pairs.

    Rows with zero frequency are dropped and reported; fewer than
    `min_points` usable rows raise InsufficientData.
    """
    rows = sorted((int(n), float(f)) for n, f in rows)
    for n, f in rows:
        if n < 3:
            raise ValueError(f"N must be >= 3 for log log N, got {n}")
        if not f >= 0.0:
            raise ValueError(f"frequency must be nonnegative: {f}")
    zeros = [n for n, f in rows if f <= 0]
    good = [(n, f) for n, f in rows if f > 0]
    if len(good) < min_points:
        raise InsufficientData(
            f"need {min_points} N values with nonzero frequency, have {len(good)}"
            + (f" (zero counts at N={zeros})" if zeros else ""))
    n = np.array([g[0] for g in good], dtype=float)
    f = np.array([g[1] for g in good], dtype=float)
    logn = np.log(n)
    logc, a, res_a = _line(np.log(logn), np.log(f) + logn)
    logcb, b, res_b = _line(logn, np.log(f))
    return DecayFit(float(np.exp(logc)), a, res_a, float(np.exp(logcb)), b, res_b,
                    [int(v) for v in n], zeros)
