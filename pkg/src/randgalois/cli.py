"""Command line entry point: resolvent, classify, divisors, census, fit."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import ConfigError, RandGaloisError
from .poly import format_poly, is_perfect_square, parse_poly


def _cmd_resolvent(args) -> int:
    from .stauduhar import alternating_resolvent, has_integer_root
    from .wedge import wedge_resolvent

    p = parse_poly(args.poly)
    if args.group:
        q = alternating_resolvent(p)
        hit = has_integer_root(q.resolvent)
        print(format_poly(q.resolvent))
        print(json.dumps({"group": "alternating", "integral_root": hit.found,
                          "root": hit.root, "simple": hit.simple,
                          "disc_square": is_perfect_square(-q.resolvent.coeffs[0])}))
        return 0
    if args.k is None:
        raise ConfigError("resolvent needs --k or --group")
    print(format_poly(wedge_resolvent(p, args.k, method=args.method).resolvent))
    return 0


def _cmd_classify(args) -> int:
    from .galois.classify import ClassifyBudget, classify

    k_list = None
    if args.k_list:
        k_list = tuple(int(v) for v in args.k_list.split(",") if v.strip())
    budget = ClassifyBudget(primes=args.budget_primes, k_list=k_list, seed=args.seed,
                            resolvent_route=args.route)
    v = classify(parse_poly(args.poly), budget)
    print(json.dumps(v.to_json(), indent=2 if args.pretty else None))
    return 0


def _parse_grid(text: str) -> list:
    return [int(float(v)) for v in text.replace(";", ",").split(",") if v.strip()]


def _cmd_divisors(args) -> int:
    from . import divisors

    grid = _parse_grid(args.x)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["x", "mean", "predicted", "ratio"])
    if args.mode == "hyperbola":
        rows = [divisors.hyperbola_average(x) for x in grid]
    elif args.mode == "tauk":
        rows = [divisors.tau_k_average(x, args.k) for x in grid]
    else:
        poly = parse_poly(args.poly or "0 1")
        res = divisors.vdc_moment(poly, args.s, grid)
        rows = res.samples
        print(f"fitted exponent {res.exponent:.6f} (skipped {res.skipped})", file=sys.stderr)
    for r in rows:
        w.writerow([r.x, repr(r.mean), repr(r.predicted), repr(r.ratio)])
    return 0


def _cmd_census(args) -> int:
    from .harness import ExperimentConfig, run_census

    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    if args.svg:
        raw["out_svg"] = args.svg
    cfg = ExperimentConfig.from_json(raw)
    report = run_census(cfg, workers=args.workers)
    if not cfg.out_csv:
        sys.stdout.write(report.csv_text())
    print(f"census finished in {report.runtime:.1f}s", file=sys.stderr)
    return 0


def _cmd_fit(args) -> int:
    from .fitting import fit_decay

    with open(args.csv, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows or args.event not in rows[0]:
        raise ConfigError(f"column {args.event!r} not in {args.csv}")
    pts = [(int(r["N"]), int(r[args.event]) / int(r["samples"])) for r in rows]
    print(json.dumps({"event": args.event, **fit_decay(pts).to_json()}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="randgalois", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("resolvent", help="wedge resolvent p_k or the alternating resolvent")
    r.add_argument("--poly", required=True, help='ascending coefficients, e.g. "-1 -3 0 1"')
    r.add_argument("--k", type=int)
    r.add_argument("--group", choices=["alternating"])
    r.add_argument("--method", choices=["newton", "matrix"], default="newton")
    r.set_defaults(func=_cmd_resolvent)

    c = sub.add_parser("classify", help="certified Galois verdict as JSON")
    c.add_argument("--poly", required=True)
    c.add_argument("--budget-primes", type=int, default=40)
    c.add_argument("--k-list", default=None, help="comma separated, e.g. 2,3,6")
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--route", choices=["auto", "exact", "cycle"], default="auto")
    c.add_argument("--pretty", action="store_true")
    c.set_defaults(func=_cmd_classify)

    dv = sub.add_parser("divisors", help="divisor-function averages as CSV")
    dv.add_argument("--mode", choices=["hyperbola", "tauk", "vdc"], required=True)
    dv.add_argument("--x", required=True, help="bound or comma separated grid")
    dv.add_argument("--k", type=int, default=2)
    dv.add_argument("--s", type=int, default=1)
    dv.add_argument("--poly", default=None)
    dv.set_defaults(func=_cmd_divisors)

    cs = sub.add_parser("census", help="run a census from a JSON config")
    cs.add_argument("--config", required=True)
    cs.add_argument("--svg", default=None)
    cs.add_argument("--workers", type=int, default=1)
    cs.set_defaults(func=_cmd_census)

    f = sub.add_parser("fit", help="refit decay models on a census CSV")
    f.add_argument("--csv", required=True)
    f.add_argument("--event", required=True)
    f.set_defaults(func=_cmd_fit)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RandGaloisError as exc:
        print(json.dumps(exc.to_json()))
        return 2


if __name__ == "__main__":
    sys.exit(main())
