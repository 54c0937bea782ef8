"""Brute-force evaluation of the Apollonian weak metric.

``delta_A(x, y) = sup over boundary points a of log(|x - a| / |y - a|)``,
computed by dense boundary sampling followed by ternary refinement of the
best sample.  On the unit circle and on a line the ratio has a single local
maximum, so the true maximizer is always within one sample step of the best
sample; polygons refine every discrete local maximum instead.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .config import DEFAULT, Config
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
from .geom import as_point


@dataclass(frozen=True)
class ExtremalBoundaryPoint:
    """A boundary point and the value of ``|x - a|/|y - a|`` there.

    ``point`` is None when the extremum is only approached at infinity
    (unbounded boundaries).
    """

    point: Optional[complex]
    achieved: float
    kind: str = "max"


def clamp_zero(v: float, tol: float = DEFAULT.zero_clamp) -> float:
    return 0.0 if abs(v) <= tol else v


def _ratio(x: complex, y: complex, a: complex) -> float:
    return abs(x - a) / abs(y - a)


def _halfplane_sup(x, y, n, cfg: Config):
    w = cfg.window_scale * (abs(x) + abs(y) + 1.0)

    def windowed(w):
        v, t = _kernels.segment_max(x, y, -w, 1.0, 2.0 * w, n, cfg.refine_tol)
        return v, complex(-w + t)

    v, a = windowed(w)
    for _ in range(cfg.max_doublings):
        w *= 2.0
        v2, a2 = windowed(w)
        # track the raw value: a tiny positive peak can sit far out while
        # the clamped value still reads 0
        moved = abs(v2 - v)
        if v2 > v:
            v, a = v2, a2
        if moved < cfg.window_tol:
            break
    # the point at infinity contributes log 1 = 0 to the supremum
    if v <= 0.0:
        return 0.0, None
    return v, a


def apollonian_oracle(
    A: Domain, x, y, n: int | None = None, config: Config = DEFAULT
) -> tuple[float, ExtremalBoundaryPoint]:
    """Directed Apollonian distance by boundary search, with its maximizer."""
    require_eligible(A)
    x, y = as_point(x), as_point(y)
    require_inside(A, x, y)
    n = config.oracle_resolution if n is None else int(n)

    if isinstance(A, UnitDisk):
        if x == y:
            return 0.0, ExtremalBoundaryPoint(1 + 0j, 1.0)
        v, theta = _kernels.circle_max(x, y, n, config.refine_tol)
        a = cmath.exp(1j * theta)
    elif isinstance(A, UpperHalfPlane):
        if x == y:
            return 0.0, ExtremalBoundaryPoint(None, 1.0)
        v, a = _halfplane_sup(x, y, n, config)
        if a is None:
            return 0.0, ExtremalBoundaryPoint(None, 1.0)
    elif isinstance(A, ConvexPolygon):
        verts = A.array
        if x == y:
            return 0.0, ExtremalBoundaryPoint(A.vertices[0], 1.0)
        v, s = _kernels.polygon_max(x, y, verts, n, config.refine_tol)
        a = complex(polygon_points(verts, np.array([s]))[0])
    elif isinstance(A, SampledBoundary):
        pts = A.array
        v, k = _kernels.points_max(x, y, pts)
        a = complex(pts[k])
    else:
        raise TypeError(f"unknown domain {A!r}")
    return clamp_zero(v, config.zero_clamp), ExtremalBoundaryPoint(a, _ratio(x, y, a))
