"""Command-line front end.

Subcommands::

    asymgauge gauge BODY --point 3,-5
    asymgauge analyze BODY
    asymgauge equiv BODY1 BODY2
    asymgauge laws --dim 3 --cases 50 [--seed S] [--mutate L3]
    asymgauge scenario {hyperbola,cylinder,parabola} [--N 50]
    asymgauge sample BODY --count 200 [--seed S]

``BODY`` is a JSON file, inline JSON, or the name of an analytic body.  Every
command accepts ``--out PATH`` to also write its report as JSON.  Exit status
is 0 on success, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .asymnorm import AsymNorm, InvalidBallError, analyze, equivalent, gauge
from .kernel import DimensionError, fmt_rat, rat
from .lawcheck import LAWS, SpaceGenConfig, run_laws
from .serialize import ANALYTIC_NAMES, BodySpec, SpecError, parse_body

DEFAULT_SEED = 42
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def parse_point(text: str) -> tuple[Fraction, ...]:
    """``"3,-5"`` or ``"1.5,3/2"``; decimals convert exactly."""
    try:
        return tuple(rat(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--point: cannot parse {text!r} ({exc})") from None


def load_body(arg: str) -> BodySpec:
    if arg in ANALYTIC_NAMES:
        return parse_body({"kind": "analytic", "name": arg})
    path = Path(arg)
    if path.is_file():
        return parse_body(path.read_text())
    if arg.lstrip().startswith("{"):
        return parse_body(arg)
    raise UsageError(f"{arg!r} is neither a file, inline JSON, nor one of {ANALYTIC_NAMES}")


def load_norm(arg: str) -> AsymNorm:
    spec = load_body(arg)
    if spec.kind == "analytic":
        if spec.name == "lattice":
            from .scenarios import lattice_norm

            return lattice_norm()
        raise UsageError(f"body {spec.name!r} is not polyhedral; only gauge, sample and scenario accept it")
    return AsymNorm(spec.poly)


def _emit(args, report: dict, text: str | None = None) -> None:
    """Print ``text`` (or the JSON report) and write the JSON to ``--out``."""
    dumped = json.dumps(report, indent=2, sort_keys=True)
    print(text if text is not None else dumped)
    if args.out:
        Path(args.out).write_text(dumped + "\n")


def cmd_gauge(args) -> int:
    spec = load_body(args.body)
    x = parse_point(args.point)
    if spec.kind == "analytic" and spec.name != "lattice":
        from .scenarios import BODIES, gauge_bisect

        body = BODIES[spec.name]
        if len(x) != body.dim:
            raise DimensionError(f"point has length {len(x)}, expected {body.dim}")
        lo, hi = gauge_bisect(body, x, args.tol)
        report = {"body": spec.name, "point": [fmt_rat(v) for v in x], "interval": [lo, hi]}
        _emit(args, report, f"[{lo!r}, {hi!r}]")
        return EXIT_OK
    value = gauge(load_norm(args.body), x)
    report = {"point": [fmt_rat(v) for v in x], "gauge": fmt_rat(value)}
    _emit(args, report, fmt_rat(value))
    return EXIT_OK


def cmd_analyze(args) -> int:
    n = load_norm(args.body)
    _emit(args, analyze(n))
    return EXIT_OK


def cmd_equiv(args) -> int:
    cert = equivalent(load_norm(args.first), load_norm(args.second))
    _emit(args, cert.to_json())
    return EXIT_OK


def cmd_laws(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("ASYMGAUGE_SEED", DEFAULT_SEED))
    try:
        cfg = SpaceGenConfig(
            dim=args.dim,
            n_vertices=args.vertices,
            n_rays=args.rays,
            coordinate_bound=args.bound,
            seed=seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    laws = args.laws.split(",") if args.laws else None
    try:
        report = run_laws(cfg, args.cases, laws=laws, mutate=args.mutate, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = report.to_json()
    _emit(args, data, report.to_text() if args.format == "text" else None)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_scenario(args) -> int:
    from .scenarios import cylinder_scenario, hyperbola_scenario, parabola_scenario

    if args.name == "hyperbola":
        report = hyperbola_scenario()
    elif args.name == "cylinder":
        report = cylinder_scenario(N=args.N)
    else:
        report = parabola_scenario(samples=args.samples)
    data = report.to_json()
    _emit(args, data, report.to_text() if args.format == "text" else None)
    return EXIT_OK if report.passed else EXIT_FAIL


def _label(g, tol) -> str:
    if g <= tol:
        return "theta"
    if abs(g - 1) <= tol:
        return "boundary"
    return "interior" if g < 1 else "exterior"


def cmd_sample(args) -> int:
    """Random grid points with step ``1/8`` in ``[-box, box]^d``, labelled by gauge.

    Polyhedral bodies are labelled exactly; their vertices and theta generators
    are included so every label class is represented.  Analytic bodies use the
    closed-form gauge (or bisection) with tolerance ``--tol``.
    """
    spec = load_body(args.body)
    rng = random.Random(args.seed if args.seed is not None else int(os.environ.get("ASYMGAUGE_SEED", DEFAULT_SEED)))
    analytic = spec.kind == "analytic" and spec.name != "lattice"
    if analytic:
        from .scenarios import BODIES, UnboundedGaugeError, gauge_bisect

        body = BODIES[spec.name]
        dim = body.dim

        def g(x):
            if body.exact_gauge is not None:
                return body.exact_gauge(x)
            try:
                lo, hi = gauge_bisect(body, x, args.tol / 10)
            except UnboundedGaugeError:
                return float("inf")
            return (lo + hi) / 2

        tol = args.tol
        extra = [tuple(Fraction(c) for c in r) for r in body.theta_rays]
    else:
        n = load_norm(args.body)
        dim = n.dim

        def g(x):
            return gauge(n, x)

        tol = 0
        extra = list(n.vrep.points) + list(n.theta.rays)
    steps = int(args.box * 8)
    pts = [tuple(Fraction(rng.randint(-steps, steps), 8) for _ in range(dim)) for _ in range(args.count)]
    counts: dict[str, int] = {}
    out = sys.stdout if not args.csv else open(args.csv, "w", newline="")
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"x{i + 1}" for i in range(dim)] + ["label"])
        for x in extra + pts:
            label = _label(g(x), tol)
            counts[label] = counts.get(label, 0) + 1
            w.writerow([repr(float(c)) for c in x] + [label])
    finally:
        if out is not sys.stdout:
            out.close()
    if args.out:
        Path(args.out).write_text(json.dumps({"dim": dim, "counts": counts}, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asymgauge", description="Exact toolkit for polyhedral asymmetric norms.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the report as JSON to this path")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gauge", parents=[common], help="evaluate the gauge of a body at a point")
    p.add_argument("body")
    p.add_argument("--point", required=True, help="comma-separated coordinates, e.g. 3,-5 or 1.5,3/2")
    p.add_argument("--tol", type=float, default=1e-9, help="bisection tolerance for analytic bodies")
    p.set_defaults(func=cmd_gauge)

    p = sub.add_parser("analyze", parents=[common], help="full report on a polyhedral norm")
    p.add_argument("body")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("equiv", parents=[common], help="equivalence constants of two norms")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("laws", parents=[common], help="run the law suite on random norms")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--seed", type=int, default=None, help=f"default: $ASYMGAUGE_SEED or {DEFAULT_SEED}")
    p.add_argument("--vertices", type=int, default=5, help="maximum random vertices per space")
    p.add_argument("--rays", type=int, default=2, help="maximum random rays per space")
    p.add_argument("--bound", type=int, default=4, help="coordinate bound")
    p.add_argument("--laws", help=f"comma-separated subset of {','.join(LAWS)}")
    p.add_argument("--mutate", choices=["L3"], help="inject a known bug to check the harness")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("scenario", parents=[common], help="run a worked example")
    p.add_argument("name", choices=["hyperbola", "cylinder", "parabola"])
    p.add_argument("--N", type=int, default=50, help="cylinder polytope size")
    p.add_argument("--samples", type=int, default=1000, help="parabola sample count")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("sample", parents=[common], help="write a labelled CSV point cloud")
    p.add_argument("body")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--box", type=float, default=3.0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SpecError, InvalidBallError, DimensionError, OSError) as exc:
        print(f"asymgauge: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
