"""Monte Carlo censuses over random monic polynomials of bounded height.

Every sample has its own stream: blake2b keyed on (seed, N, index).  A run
gives identical counts whatever the number of workers, because the counts
for a chunk of indices depend only on those indices.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ConfigError, InsufficientData, RandGaloisError
from .fitting import fit_decay
from .galois.classify import ClassifyBudget, GaloisTag, classify
from .galois.factor import FrobeniusSampler
from .poly import IntPolynomial, discriminant, is_perfect_square

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "CSV_COLUMNS",
    "EVENTS",
    "sample_polynomial",
    "coefficient_stream",
    "run_census",
    "probe_truth_conjectures",
    "square_discriminant_samples",
    "frobenius_types",
    "write_svg",
]

CSV_COLUMNS = ["N", "samples", "reducible", "degenerate", "disc_square",
               "proven_alternating_contained", "proven_full_symmetric",
               "inconclusive", "seed"]
EVENTS = CSV_COLUMNS[2:-1]

_TAG_COLUMN = {
    GaloisTag.REDUCIBLE: "reducible",
    GaloisTag.DEGENERATE: "degenerate",
    GaloisTag.ALTERNATING: "proven_alternating_contained",
    GaloisTag.FULL_SYMMETRIC: "proven_full_symmetric",
    GaloisTag.HOMOGENEOUS: "inconclusive",
    GaloisTag.INCONCLUSIVE: "inconclusive",
}


@dataclass(frozen=True)
class ExperimentConfig:
    degree: int
    n_grid: tuple
    samples_per_n: int
    pattern: tuple = ()          # ((index, fixed value), ...); absent indices are free
    seed: int = 0
    budget: ClassifyBudget = field(default_factory=ClassifyBudget)
    mode: str = "classify"       # or "disc": discriminant only
    out_csv: str | None = None
    out_json: str | None = None
    out_svg: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "n_grid", tuple(int(n) for n in self.n_grid))
        object.__setattr__(self, "pattern", tuple(sorted((int(i), int(v)) for i, v in dict(self.pattern).items())))
        self.validate()

    @property
    def fixed(self) -> dict:
        return dict(self.pattern)

    @property
    def free_indices(self) -> list:
        fixed = self.fixed
        return [i for i in range(self.degree) if i not in fixed]

    def validate(self):
        d = self.degree
        if not isinstance(d, int) or d < 2:
            raise ConfigError("degree must be an integer >= 2")
        if not self.n_grid or any(n < 1 for n in self.n_grid):
            raise ConfigError("n_grid must be a non-empty list of positive heights")
        if len(set(self.n_grid)) != len(self.n_grid):
            raise ConfigError("n_grid has repeated values")
        if self.samples_per_n < 1:
            raise ConfigError("samples_per_n must be positive")
        if not 0 <= self.seed < 1 << 64:
            raise ConfigError("seed must fit in 64 unsigned bits")
        if self.mode not in ("classify", "disc"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        fixed = self.fixed
        for i in fixed:
            if not 0 <= i < d:
                raise ConfigError(f"pattern index {i} outside 0..{d - 1}")
        free = self.free_indices
        if fixed and len(free) < 2:
            raise ConfigError("at least two coefficients must stay free")
        if fixed.get(0, None) == 0:
            raise ConfigError("fixing the constant term to 0 forces a factor x")
        if not free:
            raise ConfigError("no free coefficients")
        support = free + [i for i, v in fixed.items() if v != 0]
        for step in range(2, d + 1):
            if d % step == 0 and all(i % step == 0 for i in support):
                raise ConfigError(f"pattern forces the shape f(x^{step})")

    @classmethod
    def from_json(cls, obj: dict) -> "ExperimentConfig":
        try:
            pattern = {}
            for entry in obj.get("pattern", []):
                if "fixed" in entry and entry["fixed"] is not None:
                    pattern[int(entry["index"])] = int(entry["fixed"])
            b = obj.get("budget", {})
            budget = ClassifyBudget(
                primes=int(b.get("primes", 40)),
                k_list=tuple(b["k_list"]) if b.get("k_list") else None,
                seed=b.get("seed"),
                resolvent_route=b.get("resolvent_route", "auto"),
            )
            return cls(
                degree=int(obj["degree"]),
                n_grid=tuple(obj["n_grid"]),
                samples_per_n=int(obj["samples_per_n"]),
                pattern=tuple(pattern.items()),
                seed=int(obj.get("seed", 0)),
                budget=budget,
                mode=obj.get("mode", "classify"),
                out_csv=obj.get("out_csv"),
                out_json=obj.get("out_json"),
                out_svg=obj.get("out_svg"),
            )
        except ConfigError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"malformed config: {exc!r}") from exc

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "n_grid": list(self.n_grid),
            "samples_per_n": self.samples_per_n,
            "pattern": [{"index": i, "fixed": v} for i, v in self.pattern],
            "seed": self.seed,
            "mode": self.mode,
            "budget": self.budget.to_json(),
        }


def coefficient_stream(seed: int, n: int, index: int, count: int) -> list:
    """`count` uniform integers in [-n, n] for sample `index` at height n."""
    m = 2 * n + 1
    limit = (1 << 64) - (1 << 64) % m
    key = seed.to_bytes(8, "little") + n.to_bytes(8, "little") + index.to_bytes(8, "little")
    out = []
    block = 0
    while len(out) < count:
        digest = hashlib.blake2b(block.to_bytes(8, "little"), key=key, digest_size=64).digest()
        for j in range(0, 64, 8):
            v = int.from_bytes(digest[j:j + 8], "little")
            if v < limit:
                out.append(v % m - n)
                if len(out) == count:
                    break
        block += 1
    return out


def sample_polynomial(config: ExperimentConfig, n: int, index: int) -> IntPolynomial:
    free = config.free_indices
    draws = coefficient_stream(config.seed, n, index, len(free))
    coeffs = [0] * config.degree + [1]
    for i, v in config.fixed.items():
        coeffs[i] = v
    for i, v in zip(free, draws):
        coeffs[i] = v
    return IntPolynomial(coeffs)


def _tally(config: ExperimentConfig, n: int, start: int, stop: int) -> dict:
    counts = Counter()
    for idx in range(start, stop):
        p = sample_polynomial(config, n, idx)
        if config.mode == "disc":
            disc = discriminant(p)
            if disc == 0:
                counts["degenerate"] += 1
            elif is_perfect_square(disc):
                counts["disc_square"] += 1
            continue
        try:
            v = classify(p, config.budget)
        except (RandGaloisError, ArithmeticError) as exc:
            counts["inconclusive"] += 1
            counts["errors"] += 1
            counts["error:" + type(exc).__name__] += 1
            continue
        counts[_TAG_COLUMN[v.tag]] += 1
        if v.tag is GaloisTag.HOMOGENEOUS:
            counts["homogeneity_certified"] += 1
        if v.disc_square:
            counts["disc_square"] += 1
    return dict(counts)


def _tally_job(args):
    return _tally(*args)


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    rows: list
    fits: dict
    runtime: float = 0.0

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows:
            w.writerow([row[c] for c in CSV_COLUMNS])
        return buf.getvalue()

    def json_text(self) -> str:
        # runtime is deliberately left out so reports compare byte for byte
        body = {
            "config": self.config.to_json(),
            "rows": self.rows,
            "frequencies": [
                {"N": r["N"], **{e: r[e] / r["samples"] for e in EVENTS},
                 "non_full_symmetric": 1 - r["proven_full_symmetric"] / r["samples"]}
                for r in self.rows
            ],
            "fits": self.fits,
        }
        return json.dumps(body, indent=2, sort_keys=True) + "\n"

    def frequency(self, event: str) -> list:
        return [(r["N"], r[event] / r["samples"]) for r in self.rows]


def _fit_events(rows: list) -> dict:
    fits = {}
    for event in EVENTS + ["non_full_symmetric"]:
        if event == "non_full_symmetric":
            pts = [(r["N"], 1 - r["proven_full_symmetric"] / r["samples"]) for r in rows]
        else:
            pts = [(r["N"], r[event] / r["samples"]) for r in rows]
        if not any(f > 0 for _, f in pts):
            continue
        try:
            fits[event] = fit_decay(pts).to_json()
        except (InsufficientData, ValueError) as exc:
            fits[event] = {"error": str(exc)}
    return fits


def run_census(config: ExperimentConfig, workers: int = 1, chunk: int | None = None,
               write: bool = True) -> ExperimentReport:
    t0 = time.perf_counter()
    s = config.samples_per_n
    if chunk is None:
        chunk = max(1, min(5000, -(-s // max(1, 4 * workers))))
    jobs = [(config, n, a, min(a + chunk, s)) for n in config.n_grid for a in range(0, s, chunk)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_job, jobs))
    else:
        parts = [_tally_job(j) for j in jobs]
    per_n = {n: Counter() for n in config.n_grid}
    for (cfg, n, _a, _b), part in zip(jobs, parts):
        per_n[n].update(part)
    rows = []
    for n in config.n_grid:
        c = per_n[n]
        row = {"N": n, "samples": s}
        for e in EVENTS:
            row[e] = c.get(e, 0)
        row["seed"] = config.seed
        extras = {k: v for k, v in sorted(c.items()) if k not in row}
        if extras:
            row["extra"] = extras
        rows.append(row)
    report = ExperimentReport(config, rows, _fit_events(rows), time.perf_counter() - t0)
    if write:
        if config.out_csv:
            with open(config.out_csv, "w", newline="") as fh:
                fh.write(report.csv_text())
        if config.out_json:
            with open(config.out_json, "w") as fh:
                fh.write(report.json_text())
        if config.out_svg:
            write_svg(report, config.out_svg)
    return report


def probe_truth_conjectures(config: ExperimentConfig, workers: int = 1) -> dict:
    """Square-discriminant frequency against N and its fitted slope."""
    if config.degree < 3:
        raise ConfigError("the conjecture probe needs degree >= 3")
    disc_cfg = ExperimentConfig(config.degree, config.n_grid, config.samples_per_n,
                                config.pattern, config.seed, config.budget, mode="disc")
    report = run_census(disc_cfg, workers=workers, write=False)
    pts = report.frequency("disc_square")
    zeros = [n for n, f in pts if f == 0]
    if zeros:
        raise InsufficientData(f"no square discriminants at N={zeros}")
    fit = fit_decay(pts)
    return {
        "rows": report.rows,
        "frequencies": pts,
        "slope": fit.b,
        "conjectured_slope": -(config.degree / 2 - 1),
        "fit": fit.to_json(),
    }


# --- structured search for square discriminants -------------------------------

def _translate(p: IntPolynomial, s: int) -> IntPolynomial:
    """p(x - s)."""
    out = IntPolynomial.constant(0)
    shift = IntPolynomial((-s, 1))
    for c in reversed(p.coeffs):
        out = out * shift + IntPolynomial.constant(c)
    return out


def _twin_quadratics(rng: random.Random, h: int):
    """Two quadratics whose roots generate the same quadratic field."""
    b, c = rng.randint(-h, h), rng.randint(-h, h)
    q1 = IntPolynomial((c, b, 1))
    t = rng.choice([-2, -1, 1, 2])
    s = rng.randint(-3, 3)
    # roots s + t*(roots of q1)
    q2 = IntPolynomial((s * s - t * b * s + t * t * c, t * b - 2 * s, 1))
    return [q1, q2]


def _cyclic_cubic(rng: random.Random, h: int):
    t = rng.randint(-h, h)
    return [_translate(IntPolynomial((-1, -(t + 3), -t, 1)), rng.randint(-2, 2))]


def _v4_quartic(rng: random.Random, h: int):
    b = rng.randint(-h, h)
    m = rng.randint(1, max(1, math.isqrt(h)))
    return [_translate(IntPolynomial((m * m, 0, b, 0, 1)), rng.randint(-1, 1))]


def _linear(rng: random.Random, h: int):
    return [IntPolynomial((rng.randint(-h, h), 1))]


_SHAPES = {
    5: [
        ("1+1+1+1+1", [_linear] * 5),
        ("2+2+1", [_twin_quadratics, _linear]),
        ("3+1+1", [_cyclic_cubic, _linear, _linear]),
        ("4+1", [_v4_quartic, _linear]),
    ],
}


def square_discriminant_samples(d: int, n: int, count: int, seed: int = 0,
                                uniform_share: float = 0.02, max_uniform_tries: int = 2 * 10 ** 5):
    """Monic degree-d polynomials in the height-n box with nonzero square discriminant.

    Uniform draws alone hit the event far too rarely, so most samples come
    from products of factors built to have square total discriminant:
    linear factors, twin quadratic pairs, cyclic cubics and V4 quartics.
    A small share comes from plain uniform rejection sampling.  Every
    returned polynomial is re-checked exactly.  Yields (shape, polynomial).
    """
    rng = random.Random(seed)
    shapes = [(name, parts) for name, parts in _SHAPES.get(d, [])
              if _shape_degree(parts) == d]
    if not shapes:
        raise ValueError(f"no structured shapes for degree {d}")
    out = []
    want_uniform = int(count * uniform_share)
    tries = 0
    while want_uniform and tries < max_uniform_tries and len(out) < want_uniform:
        tries += 1
        p = IntPolynomial([rng.randint(-n, n) for _ in range(d)] + [1])
        disc = discriminant(p)
        if disc and is_perfect_square(disc):
            out.append(("uniform", p))
    while len(out) < count:
        name, parts = rng.choice(shapes)
        h = rng.choice([2, 4, 8, 16])
        p = IntPolynomial.constant(1)
        for make in parts:
            for f in make(rng, h):
                p = p * f
        if p.degree != d or max(abs(c) for c in p.coeffs[:-1]) > n:
            continue
        disc = discriminant(p)
        if disc and is_perfect_square(disc):
            out.append((name, p))
    return out


def _shape_degree(parts) -> int:
    sizes = {_linear: 1, _twin_quadratics: 4, _cyclic_cubic: 3, _v4_quartic: 4}
    return sum(sizes[m] for m in parts)


def frobenius_types(p: IntPolynomial, budget: int = 40) -> list:
    return FrobeniusSampler(p, budget).fill()


# --- minimal SVG --------------------------------------------------------------

_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def write_svg(report: ExperimentReport, path: str, width: int = 640, height: int = 420):
    """Log-log plot of event frequency against N."""
    series = []
    for e in EVENTS:
        pts = [(n, f) for n, f in report.frequency(e) if f > 0]
        if pts:
            series.append((e, pts))
    xs = [math.log10(n) for _, pts in series for n, _ in pts] or [0, 1]
    ys = [math.log10(f) for _, pts in series for _, f in pts] or [0, 1]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    x1 = x1 if x1 > x0 else x0 + 1
    y1 = y1 if y1 > y0 else y0 + 1
    m = 50

    def px(x):
        return m + (x - x0) / (x1 - x0) * (width - 2 * m)

    def py(y):
        return height - m - (y - y0) / (y1 - y0) * (height - 2 * m)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
             f'<rect width="{width}" height="{height}" fill="white"/>',
             f'<line x1="{m}" y1="{height - m}" x2="{width - m}" y2="{height - m}" stroke="black"/>',
             f'<line x1="{m}" y1="{m}" x2="{m}" y2="{height - m}" stroke="black"/>',
             f'<text x="{width / 2:.0f}" y="{height - 12}" text-anchor="middle">log10 N</text>',
             f'<text x="14" y="{height / 2:.0f}" transform="rotate(-90 14 {height / 2:.0f})" '
             f'text-anchor="middle">log10 frequency</text>']
    for i, (e, pts) in enumerate(series):
        col = _COLORS[i % len(_COLORS)]
        coords = " ".join(f"{px(math.log10(n)):.1f},{py(math.log10(f)):.1f}" for n, f in pts)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{col}"/>')
        for n, f in pts:
            parts.append(f'<circle cx="{px(math.log10(n)):.1f}" cy="{py(math.log10(f)):.1f}" '
                         f'r="3" fill="{col}"/>')
        parts.append(f'<text x="{width - m - 200}" y="{m + 16 * i}" fill="{col}">{e}</text>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")
