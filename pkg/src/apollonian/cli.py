"""Command-line interface: ``apollonian {dist,compare,geodesic,check}``.

Exit codes: 0 success, 1 property failure, 2 domain/metric mismatch,
3 malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

import numpy as np

from . import checks, sampling
from .config import DEFAULT
from .domains import (
    UnitDisk,
    UpperHalfPlane,
    convex_body,
    domain_from_json,
    domain_to_json,
)
from .errors import GeometryError, IneligibleDomain, UnboundedDomain
from .geodesics import (
    geodesic_arc_disk,
    polyline_json,
    polyline_svg,
    sample_arc,
    verify_geodesic,
)
from .geom import Circle
from .metrics import (
    apollonian,
    apollonian_disk,
    apollonian_halfplane,
    apollonian_oracle,
    apollonian_semimetric,
    extremal_points_disk,
    funk,
    half_apollonian,
    hilbert,
    i_weak,
    j_tilde,
    j_vuorinen,
    part_affine,
    part_harmonic_disk,
    poincare_disk,
    poincare_halfplane,
)

EXIT_FAIL, EXIT_MISMATCH, EXIT_PARSE = 1, 2, 3
CSV_COLUMNS = ["case_id", "input", "expected", "actual", "abs_error", "pass"]
_POINT = re.compile(r"^\s*-?[\d.]+(e[-+]?\d+)?\s*,\s*-?[\d.]+(e[-+]?\d+)?\s*$", re.I)


class UsageError(Exception):
    """Domain or metric mismatch (exit 2)."""


class ParseError(Exception):
    """Malformed command-line input (exit 3)."""


def parse_point(text: str) -> complex:
    try:
        a, b = text.strip().split(",")
        return complex(float(a), float(b))
    except ValueError:
        raise ParseError(f"malformed point {text!r}; expected 'x,y'") from None


def _pt(z: complex) -> list:
    return [z.real, z.imag]


def _load_domain(args):
    if args.domain_file:
        try:
            with open(args.domain_file) as fh:
                data = json.load(fh)
            return domain_from_json(data)
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad domain file: {exc}") from None
    try:
        return domain_from_json({"type": args.domain})
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _need(A, *kinds, metric):
    if not isinstance(A, kinds):
        names = ", ".join(k.__name__ for k in kinds)
        raise UsageError(f"metric {metric!r} needs domain {names}, got {type(A).__name__}")


def _metric_value(name, A, x, y, resolution):
    """Evaluate ``name`` and return (value, extremal-point dict or None)."""
    extremal = None
    if name == "apollonian":
        value = apollonian(A, x, y, resolution)
        if isinstance(A, UnitDisk) and x != y:
            hi = extremal_points_disk(x, y)[0]
            extremal = {"point": _pt(hi.point), "ratio": hi.achieved, "source": "closed_form"}
        elif x != y:
            _, e = apollonian_oracle(A, x, y, resolution)
            extremal = {"point": None if e.point is None else _pt(e.point),
                        "ratio": e.achieved, "source": "oracle"}
        return value, extremal
    if name == "apollonian_oracle":
        value, e = apollonian_oracle(A, x, y, resolution)
        return value, {"point": None if e.point is None else _pt(e.point),
                       "ratio": e.achieved, "source": "oracle"}
    if name == "apollonian_halfplane":
        _need(A, UpperHalfPlane, metric=name)
        return apollonian_halfplane(x, y), None
    if name == "part_harmonic":
        _need(A, UnitDisk, metric=name)
        return part_harmonic_disk(x, y, resolution), None
    if name == "poincare":
        _need(A, UnitDisk, UpperHalfPlane, metric=name)
        f = poincare_disk if isinstance(A, UnitDisk) else poincare_halfplane
        return f(x, y), None
    if name in ("half_apollonian", "apollonian_semimetric"):
        f = half_apollonian if name == "half_apollonian" else apollonian_semimetric
        return f(A, x, y, resolution), None
    simple = {"i_weak": i_weak, "j_tilde": j_tilde, "j_vuorinen": j_vuorinen,
              "funk": funk, "hilbert": hilbert, "part_affine": part_affine}
    if name in simple:
        if name in ("funk", "hilbert", "part_affine"):
            try:
                convex_body(A)
            except (UnboundedDomain, IneligibleDomain) as exc:
                raise UsageError(f"metric {name!r}: {exc}") from None
        return simple[name](A, x, y), None
    raise UsageError(f"unknown metric {name!r}")


METRICS = (
    "apollonian", "apollonian_oracle", "apollonian_halfplane", "apollonian_semimetric",
    "funk", "half_apollonian", "hilbert", "i_weak", "j_tilde", "j_vuorinen",
    "part_affine", "part_harmonic", "poincare",
)


def _emit_csv(rows, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([r["case_id"], r["input"], _cell(r["expected"]), _cell(r["actual"]),
                    _cell(r["abs_error"]), str(r["pass"]).lower()])


def _cell(v):
    return repr(float(v)) if isinstance(v, (float, int, np.floating)) else str(v)


def cmd_dist(args, out) -> int:
    A = _load_domain(args)
    x, y = parse_point(args.x), parse_point(args.y)
    value, extremal = _metric_value(args.metric, A, x, y, args.resolution)
    if args.format == "csv":
        _emit_csv([{"case_id": f"dist.{args.metric}", "input": f"{args.x} -> {args.y}",
                    "expected": "", "actual": value, "abs_error": "", "pass": True}], out)
        return 0
    record = {"metric": args.metric, "domain": domain_to_json(A),
              "from": _pt(x), "to": _pt(y), "value": value}
    if extremal is not None:
        record["extremal"] = extremal
    out.write(json.dumps(record) + "\n")
    return 0


def _pair_text(x, y) -> str:
    x, y = complex(x), complex(y)
    return f"{x.real!r},{x.imag!r} -> {y.real!r},{y.imag!r}"


def cmd_compare(args, out) -> int:
    A = _load_domain(args)
    if not isinstance(A, (UnitDisk, UpperHalfPlane)):
        raise UsageError("compare needs unit_disk or upper_half_plane")
    tol = 1e-8 if args.tol is None else args.tol
    rng = np.random.default_rng(args.seed)
    if isinstance(A, UnitDisk):
        xs, ys = sampling.disk_points(rng, args.pairs, 0.98), sampling.disk_points(rng, args.pairs, 0.98)
        closed = apollonian_disk
    else:
        xs, ys = sampling.halfplane_points(rng, args.pairs), sampling.halfplane_points(rng, args.pairs)

        def closed(x, y):
            return apollonian_halfplane(y, x)

    rows = []
    for i, (x, y) in enumerate(zip(xs, ys)):
        c = closed(x, y)
        o = apollonian_oracle(A, x, y, args.resolution)[0]
        err = abs(c - o)
        rows.append({"case_id": f"pair{i:05d}", "input": _pair_text(x, y),
                     "expected": c, "actual": o, "abs_error": float(err), "pass": bool(err <= tol)})
    worst = max(r["abs_error"] for r in rows) if rows else 0.0
    ok = worst <= tol
    if args.format == "csv":
        _emit_csv(rows, out)
    else:
        out.write(json.dumps({"domain": domain_to_json(A), "seed": args.seed, "pairs": args.pairs,
                              "resolution": args.resolution, "tolerance": tol,
                              "max_abs_error": float(worst), "pass": bool(ok), "rows": rows}, indent=1) + "\n")
    return 0 if ok else EXIT_FAIL


def cmd_geodesic(args, out) -> int:
    x, y = parse_point(args.x), parse_point(args.y)
    try:
        arc = geodesic_arc_disk(x, y)
    except GeometryError as exc:
        raise UsageError(str(exc)) from None
    pts = sample_arc(arc, args.k)
    if args.reverse:
        pts = pts[::-1]
    tol = DEFAULT.align_tol if args.tol is None else args.tol
    report = verify_geodesic(pts, apollonian_disk, tol)
    s = arc.support
    if isinstance(s, Circle):
        support = {"kind": "circle", "center": _pt(s.center), "radius": s.radius}
        ortho = abs(abs(s.center) ** 2 - s.radius**2 - 1.0)
    else:
        support = {"kind": "line", "point": _pt(s.point), "direction": _pt(s.direction)}
        ortho = s.distance(0j)
    meta = dict(
        support=support,
        orthogonality_error=ortho,
        exit=_pt(arc.exit),
        a_plus=_pt(extremal_points_disk(x, y)[0].point),
        n_triples=report.n_triples,
        informational=bool(args.reverse),
        passed=report.passed,
    )
    if args.format == "csv":
        rows = [{"case_id": f"geodesic.p{i:03d}", "input": "", "expected": "", "actual": f"{p.real!r},{p.imag!r}",
                 "abs_error": "", "pass": True} for i, p in enumerate(pts)]
        rows.append({"case_id": "geodesic.defect_max", "input": f"k={args.k}", "expected": 0.0,
                     "actual": report.max_defect, "abs_error": report.max_defect,
                     "pass": report.passed or args.reverse})
        _emit_csv(rows, out)
    else:
        out.write(polyline_json(pts, "unit_disk", "apollonian", report.max_defect, **meta) + "\n")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(polyline_svg(pts))
    if args.reverse:
        return 0
    return 0 if report.passed else EXIT_FAIL


def cmd_check(args, out) -> int:
    rows = checks.run(args.suite, args.seed)
    dicts = [{"case_id": r.case_id, "input": r.input, "expected": r.expected, "actual": r.actual,
              "abs_error": r.abs_error, "pass": r.passed} for r in rows]
    if args.format == "csv":
        _emit_csv(dicts, out)
    else:
        for d in dicts:
            out.write(json.dumps(d) + "\n")
    return 0 if all(r.passed for r in rows) else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        # bad literals are parse errors; unknown commands and choices are usage errors
        bad_literal = "invalid" in message and "choice" not in message
        raise SystemExit(EXIT_PARSE if bad_literal else EXIT_MISMATCH)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--domain", default="unit_disk",
                        choices=["unit_disk", "upper_half_plane"],
                        help="named domain (use --domain-file for polygons and sampled boundaries)")
    common.add_argument("--domain-file", help="domain JSON file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--resolution", type=int, default=DEFAULT.oracle_resolution)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--svg", metavar="PATH")

    p = _Parser(prog="apollonian", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", parents=[common], help="directed distance between two points")
    d.add_argument("metric", choices=METRICS)
    d.add_argument("x")
    d.add_argument("y")

    c = sub.add_parser("compare", parents=[common], help="closed form vs boundary oracle")
    c.add_argument("--pairs", type=int, default=500)

    g = sub.add_parser("geodesic", parents=[common], help="sample and verify a disk geodesic")
    g.add_argument("x")
    g.add_argument("y")
    g.add_argument("-k", type=int, default=8)
    g.add_argument("--reverse", action="store_true",
                   help="traverse the arc backwards; the defect is informational only")

    k = sub.add_parser("check", parents=[common], help="run seeded property suites")
    k.add_argument("suite", choices=[*checks.SUITES, "all"])
    return p


def _protect_negative_points(argv):
    # argparse would read "-0.5,0" as an option flag
    return [" " + a if a.startswith("-") and _POINT.match(a) else a for a in argv]


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_points(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"dist": cmd_dist, "compare": cmd_compare, "geodesic": cmd_geodesic, "check": cmd_check}
    try:
        return handlers[args.command](args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
