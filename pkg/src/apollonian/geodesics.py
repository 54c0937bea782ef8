"""Aligned triples, argmax sets and the Apollonian geodesics of the unit disk.

A path is a geodesic of a weak metric ``d`` when every ordered triple of
its points ``p_i, p_j, p_k`` (i < j < k) satisfies
``d(p_i, p_k) = d(p_i, p_j) + d(p_j, p_k)``.  In the unit disk the arcs of
circles orthogonal to the unit circle, traversed from ``x`` through ``y``,
are geodesics of the Apollonian weak metric.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._kernels import _ternary
from .config import DEFAULT
from .domains import (
    ConvexPolygon,
    Domain,
    SampledBoundary,
    UnitDisk,
    UpperHalfPlane,
    polygon_points,
    require_eligible,
    require_inside,
)
from .errors import DegenerateInput, IneligibleDomain
from .geom import Circle, GeneralizedCircle, Line, as_point, circumcircle, invert_unit_circle
from .metrics import WeakMetricFn, apollonian
from .oracle import apollonian_oracle


@dataclass(frozen=True)
class AlignedVerdict:
    lhs: float  # d(x, z)
    rhs: float  # d(x, y) + d(y, z)
    aligned: bool
    defect: float  # rhs - lhs, nonnegative up to rounding


def aligned(d: WeakMetricFn, x, y, z, tol: float = DEFAULT.align_tol) -> AlignedVerdict:
    lhs = d(x, z)
    rhs = d(x, y) + d(y, z)
    defect = rhs - lhs
    return AlignedVerdict(lhs, rhs, abs(defect) <= tol, defect)


# ---------------------------------------------------------------- argmax sets

@dataclass(frozen=True)
class ArgmaxSet:
    points: list
    value: float


def _boundary_parametrization(A: Domain, x: complex, y: complex, n: int):
    """Return ``(params, samples, point_fn, period, step)``; period is None for open curves."""
    if isinstance(A, UnitDisk):
        step = 2 * math.pi / n
        params = np.arange(n) * step
        return params, np.exp(1j * params), lambda t: complex(math.cos(t), math.sin(t)), 2 * math.pi, step
    if isinstance(A, ConvexPolygon):
        verts = A.array
        per = A.perimeter
        step = per / n
        params = np.arange(n) * step

        def point(t):
            return complex(polygon_points(verts, np.array([t]))[0])

        return params, polygon_points(verts, params), point, per, step
    if isinstance(A, UpperHalfPlane):
        w = DEFAULT.window_scale * (abs(x) + abs(y) + 1.0)
        far = apollonian_oracle(A, x, y, n)[1].point
        if far is not None:
            # widen so the maximizer found by window doubling is covered
            w = max(w, 2.0 * abs(far.real) + 1.0)
        params = np.linspace(-w, w, n)
        return params, params.astype(np.complex128), lambda t: complex(t, 0.0), None, params[1] - params[0]
    raise TypeError(f"no continuous parametrization for {A!r}")


def _logratio(x, y, a):
    return math.log(abs(x - a) / abs(y - a))


def argmax_set(
    A: Domain, x, y, n: int = DEFAULT.oracle_resolution, cluster_tol: float = 1e-9
) -> ArgmaxSet:
    """Boundary points where ``log(|x - a|/|y - a|)`` reaches its supremum.

    Every discrete local maximum of the sampled ratio is polished by ternary
    search; polished peaks within ``cluster_tol`` of the best are kept, and
    peaks within two sample steps of each other are merged.
    """
    require_eligible(A)
    x, y = as_point(x), as_point(y)
    require_inside(A, x, y)
    if abs(x - y) <= 1e-14:
        raise DegenerateInput("argmax set needs x != y")

    if isinstance(A, SampledBoundary):
        pts = A.array
        vals = np.log(np.abs(x - pts) / np.abs(y - pts))
        best = float(vals.max())
        keep = [complex(p) for p, v in zip(pts, vals) if v >= best - cluster_tol]
        return ArgmaxSet(keep, best)

    params, a, point, period, step = _boundary_parametrization(A, x, y, n)
    vals = np.log(np.abs(x - a) / np.abs(y - a))
    if period is None:
        left = np.concatenate(([-np.inf], vals[:-1]))
        right = np.concatenate((vals[1:], [-np.inf]))
    else:
        left, right = np.roll(vals, 1), np.roll(vals, -1)
    peaks = []
    for k in np.flatnonzero((vals >= left) & (vals >= right)):
        lo, hi = params[k] - step, params[k] + step
        if period is None:
            lo, hi = max(lo, params[0]), min(hi, params[-1])
        v, t = _ternary(lambda s: _logratio(x, y, point(s)), lo, hi, DEFAULT.refine_tol)
        if v < vals[k]:
            v, t = float(vals[k]), float(params[k])
        peaks.append((v, t % period if period else t))

    if isinstance(A, UpperHalfPlane):
        sup = apollonian_oracle(A, x, y, n)[0]
        if sup == 0.0 and all(v < cluster_tol for v, _ in peaks):
            # supremum only approached at infinity
            return ArgmaxSet([], 0.0)
    best = max(v for v, _ in peaks)
    kept = sorted((t, v) for v, t in peaks if v >= best - cluster_tol)

    clusters: list[list[tuple[float, float]]] = []
    for t, v in kept:
        if clusters and t - clusters[-1][-1][0] <= 2 * step:
            clusters[-1].append((t, v))
        else:
            clusters.append([(t, v)])
    if period and len(clusters) > 1 and clusters[0][0][0] + period - clusters[-1][-1][0] <= 2 * step:
        clusters[0] = clusters.pop() + clusters[0]
    reps = [point(max(c, key=lambda tv: tv[1])[0]) for c in clusters]
    return ArgmaxSet(reps, best)


def common_witness(
    A: Domain, x, y, z, tol: float = DEFAULT.align_tol, n: int = DEFAULT.oracle_resolution
):
    """A boundary point realizing all three suprema of an aligned triple, else None."""
    if not A.bounded:
        raise IneligibleDomain("common witness search needs a bounded domain")
    require_eligible(A)
    x, y, z = as_point(x), as_point(y), as_point(z)

    def d(u, v):
        return apollonian(A, u, v, n)

    verdict = aligned(d, x, y, z, tol)
    if not verdict.aligned or abs(x - z) <= 1e-14:
        return None
    targets = ((x, y, d(x, y)), (y, z, d(y, z)), (x, z, verdict.lhs))
    best, best_err = None, math.inf
    for a0 in argmax_set(A, x, z, n, cluster_tol=tol).points:
        err = max(
            abs(_logratio(u, v, a0) - dv) if u != v else 0.0 for u, v, dv in targets
        )
        if err < best_err:
            best, best_err = a0, err
    return best if best_err <= 10 * tol else None


# ------------------------------------------------------------- disk geodesics

@dataclass(frozen=True)
class GeodesicArc:
    """Arc of ``support`` starting at ``start``, passing ``through``, ending on the unit circle.

    ``orientation`` is +1 for counterclockwise travel about the circle's
    centre and -1 for clockwise; lines are always traversed with +1 along
    their direction.
    """

    support: GeneralizedCircle
    start: complex
    through: complex
    orientation: int
    exit: complex = field(compare=False)
    length: float = field(compare=False)  # parameter span from start to exit

    def point_at(self, t: float) -> complex:
        s = self.support
        if isinstance(s, Line):
            return self.start + t * s.direction
        phi = np.angle(self.start - s.center) + self.orientation * t
        return s.center + s.radius * complex(math.cos(phi), math.sin(phi))


def _unit_circle_hits(c: Circle) -> tuple[complex, complex]:
    rho = abs(c.center)
    cos_phi = (1.0 + rho**2 - c.radius**2) / (2.0 * rho)
    phi = math.acos(max(-1.0, min(1.0, cos_phi)))
    base = math.atan2(c.center.imag, c.center.real)
    return complex(math.cos(base + phi), math.sin(base + phi)), complex(
        math.cos(base - phi), math.sin(base - phi)
    )


def geodesic_arc_disk(x, y) -> GeodesicArc:
    """The arc orthogonal to the unit circle from ``x`` through ``y``."""
    x, y = as_point(x), as_point(y)
    require_inside(UnitDisk(), x, y)
    if abs(x - y) <= 1e-14:
        raise DegenerateInput("geodesic needs x != y")

    support = None
    if abs(y) > 1e-14:
        support = circumcircle(x, y, invert_unit_circle(y))
    if support is None or isinstance(support, Line):
        u = (y - x) / abs(y - x)
        support = Line(point=x, direction=u)
        # x = s0 * u on a line through the origin, so the exit is u itself
        return GeodesicArc(support, x, y, 1, u, 1.0 - (x * u.conjugate()).real)

    c = support.center
    ax = math.atan2((x - c).imag, (x - c).real)
    ay = math.atan2((y - c).imag, (y - c).real)
    hits = _unit_circle_hits(support)
    ah = [math.atan2((h - c).imag, (h - c).real) for h in hits]
    two_pi = 2 * math.pi
    for sign in (1, -1):
        dy = (sign * (ay - ax)) % two_pi
        dh = [(sign * (a - ax)) % two_pi for a in ah]
        if dy < min(dh):
            i = int(np.argmin(dh))
            return GeodesicArc(support, x, y, sign, hits[i], dh[i])
    raise DegenerateInput("x and y are not on one arc inside the disk")  # unreachable


def sample_arc(arc: GeodesicArc, k: int, margin: float = 1e-6) -> list[complex]:
    """``k`` points from ``arc.start`` toward the exit, equally spaced in the arc parameter.

    The last sample sits ``(k-1)/k`` of the way to the exit; every point is
    kept at least ``margin`` inside the unit circle.
    """
    if k < 2:
        raise DegenerateInput("need at least two samples")
    scale = arc.support.radius if isinstance(arc.support, Circle) else 1.0
    t_max = arc.length - 2.0 * margin / scale
    pts = []
    for j in range(k):
        p = arc.point_at(min(arc.length * j / k, t_max))
        if abs(p) > 1.0 - margin:
            p = p * (1.0 - margin) / abs(p)
        pts.append(p)
    return pts


@dataclass(frozen=True)
class GeodesicReport:
    max_defect: float
    n_triples: int
    passed: bool
    worst: tuple


def verify_geodesic(
    path: Sequence, d: WeakMetricFn, tol: float = DEFAULT.align_tol,
    max_triples: int = 1000, seed: int = 0,
) -> GeodesicReport:
    """Check alignment of every ordered triple of ``path`` (subsampled above ``max_triples``)."""
    pts = [as_point(p) for p in path]
    if len(pts) < 3:
        raise DegenerateInput("a geodesic check needs at least three points")
    triples = list(itertools.combinations(range(len(pts)), 3))
    if len(triples) > max_triples:
        rng = np.random.default_rng(seed)
        idx = np.sort(rng.choice(len(triples), size=max_triples, replace=False))
        triples = [triples[i] for i in idx]
    cache: dict[tuple[int, int], float] = {}

    def dist(i, j):
        if (i, j) not in cache:
            cache[i, j] = d(pts[i], pts[j])
        return cache[i, j]

    worst, worst_t = -1.0, ()
    for i, j, k in triples:
        defect = abs(dist(i, j) + dist(j, k) - dist(i, k))
        if defect > worst:
            worst, worst_t = defect, (i, j, k)
    return GeodesicReport(worst, len(triples), worst <= tol, worst_t)


def polyline_json(points: Sequence, domain: str, metric: str, defect_max: float, **extra) -> str:
    meta = {"domain": domain, "metric": metric, "defect_max": defect_max, **extra}
    return json.dumps(
        {"points": [[p.real, p.imag] for p in points], "metadata": meta}, indent=2
    )


def polyline_svg(points: Sequence, size: int = 400) -> str:
    """SVG with the unit circle and the polyline, y axis pointing up."""
    half = size / 2
    scale = 0.45 * size

    def xy(p):
        return f"{half + scale * p.real:.4f},{half - scale * p.imag:.4f}"

    d = "M " + " L ".join(xy(p) for p in points)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'  <circle cx="{half}" cy="{half}" r="{scale}" fill="none" stroke="black"/>\n'
        f'  <path d="{d}" fill="none" stroke="crimson" stroke-width="2"/>\n'
        "</svg>\n"
    )
