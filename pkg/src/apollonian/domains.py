"""Planar domains and the boundary queries the metrics rely on."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .config import DEFAULT
from .errors import (
    DegenerateInput,
    GeometryError,
    IneligibleDomain,
    PointOutsideDomain,
    UnboundedDomain,
)
from .geom import Similarity, as_point


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


@dataclass(frozen=True)
class UnitDisk:
    bounded = True


@dataclass(frozen=True)
class UpperHalfPlane:
    bounded = False


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, vertices listed counterclockwise."""

    vertices: tuple
    bounded = True

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise DegenerateInput("a polygon needs at least three vertices")
        for i in range(n):
            if abs(vs[(i + 1) % n] - vs[i]) <= 1e-14:
                raise DegenerateInput("repeated polygon vertex")
        for i in range(n):
            e0 = vs[(i + 1) % n] - vs[i]
            e1 = vs[(i + 2) % n] - vs[(i + 1) % n]
            if not _cross(e0, e1) > 0:
                raise DegenerateInput(
                    "polygon must be strictly convex with counterclockwise vertices"
                )

    @classmethod
    def from_points(cls, points) -> "ConvexPolygon":
        """Build from vertices in either orientation."""
        pts = [as_point(p) for p in points]
        area2 = sum(_cross(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))
        if area2 < 0:
            pts.reverse()
        return cls(tuple(pts))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=np.complex128)

    @property
    def perimeter(self) -> float:
        v = self.array
        return float(np.abs(np.roll(v, -1) - v).sum())

    def transformed(self, s: Similarity) -> "ConvexPolygon":
        return ConvexPolygon.from_points([s(v) for v in self.vertices])


@dataclass(frozen=True)
class SampledBoundary:
    """A boundary known only through an ordered list of sample points."""

    points: tuple
    bounded: bool = True

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.points)
        if len(pts) < 2:
            raise DegenerateInput("a sampled boundary needs at least two points")
        object.__setattr__(self, "points", pts)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.complex128)

    def transformed(self, s: Similarity) -> "SampledBoundary":
        return SampledBoundary(tuple(s(p) for p in self.points), self.bounded)


Domain = Union[UnitDisk, UpperHalfPlane, ConvexPolygon, SampledBoundary]


@dataclass(frozen=True)
class BoundarySample:
    points: np.ndarray
    resolution: int


def is_eligible(A: Domain) -> bool:
    """Bounded, or with unbounded boundary: where the Apollonian weak metric lives."""
    if isinstance(A, SampledBoundary):
        return A.bounded
    return True


def require_eligible(A: Domain) -> None:
    if not is_eligible(A):
        raise IneligibleDomain(
            "a sampled boundary flagged unbounded cannot witness the supremum"
        )


def _segment_distances(z: complex, verts: np.ndarray, closed: bool = True) -> np.ndarray:
    p = verts if closed else verts[:-1]
    q = np.roll(verts, -1) if closed else verts[1:]
    e = q - p
    len2 = np.abs(e) ** 2
    t = np.clip(((z - p) * e.conj()).real / len2, 0.0, 1.0)
    return np.abs(z - (p + t * e))


def _inside_polyline(z: complex, verts: np.ndarray) -> bool:
    # even-odd rule
    p, q = verts, np.roll(verts, -1)
    crosses = (p.imag > z.imag) != (q.imag > z.imag)
    with np.errstate(divide="ignore", invalid="ignore"):
        xs = p.real + (z.imag - p.imag) * (q.real - p.real) / (q.imag - p.imag)
    return bool(np.count_nonzero(crosses & (z.real < xs)) % 2)


def _raw_boundary_distance(A: Domain, z: complex) -> float:
    if isinstance(A, UnitDisk):
        return 1.0 - abs(z)
    if isinstance(A, UpperHalfPlane):
        return z.imag
    if isinstance(A, ConvexPolygon):
        return float(_segment_distances(z, A.array).min())
    if isinstance(A, SampledBoundary):
        return float(np.abs(A.array - z).min())
    raise TypeError(f"unknown domain {A!r}")


def contains(A: Domain, x, tol: float = DEFAULT.boundary_tol) -> bool:
    """Interior membership; points within ``tol`` of the boundary are outside."""
    z = as_point(x)
    if isinstance(A, UnitDisk):
        return abs(z) < 1.0 - tol
    if isinstance(A, UpperHalfPlane):
        return z.imag > tol
    if isinstance(A, ConvexPolygon):
        v = A.array
        e = np.roll(v, -1) - v
        w = z - v
        if not np.all(e.real * w.imag - e.imag * w.real > 0):
            return False
        return _raw_boundary_distance(A, z) > tol
    if isinstance(A, SampledBoundary):
        if A.bounded and not _inside_polyline(z, A.array):
            return False
        return _raw_boundary_distance(A, z) > tol
    raise TypeError(f"unknown domain {A!r}")


def require_inside(A: Domain, *points) -> None:
    for p in points:
        if not contains(A, p):
            raise PointOutsideDomain(f"{as_point(p)!r} is not an interior point of {A!r}")


def boundary_distance(A: Domain, x) -> float:
    """Euclidean distance from an interior point to the boundary."""
    z = as_point(x)
    require_inside(A, z)
    return _raw_boundary_distance(A, z)


def convex_body(A: Domain) -> Domain:
    """Return ``A`` as a bounded convex domain, or raise.

    A bounded sampled boundary is accepted when its points form a strictly
    convex polygon.
    """
    if isinstance(A, (UnitDisk, ConvexPolygon)):
        return A
    if isinstance(A, UpperHalfPlane) or (isinstance(A, SampledBoundary) and not A.bounded):
        raise UnboundedDomain("operation needs a bounded convex domain")
    if isinstance(A, SampledBoundary):
        try:
            return ConvexPolygon.from_points(A.points)
        except DegenerateInput as exc:
            raise IneligibleDomain(f"sampled boundary is not convex: {exc}") from None
    raise TypeError(f"unknown domain {A!r}")


def _disk_exit(x: complex, d: complex) -> complex:
    # positive root of |x + t d| = 1, written to avoid cancellation
    a = abs(d) ** 2
    b = (x.conjugate() * d).real
    c = abs(x) ** 2 - 1.0
    disc = math.sqrt(b * b - a * c)
    t = -c / (b + disc) if b > 0 else (disc - b) / a
    return x + t * d


def _polygon_exit(x: complex, d: complex, verts: np.ndarray, tol: float) -> complex:
    p = verts
    e = np.roll(verts, -1) - verts
    w = p - x
    den = d.real * e.imag - d.imag * e.real
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (w.real * e.imag - w.imag * e.real) / den
        s = (w.real * d.imag - w.imag * d.real) / den
    ok = (np.abs(den) > 0) & (s >= -tol) & (s <= 1 + tol) & (t >= 1 - tol)
    if not np.any(ok):
        raise GeometryError("ray does not leave the polygon")  # unreachable for interior x, y
    t_hit = t[ok].min()
    return x + float(t_hit) * d


def ray_exit(A: Domain, x, y, tol: float = DEFAULT.boundary_tol) -> complex:
    """Point where the ray from ``x`` through ``y`` leaves ``A``."""
    A = convex_body(A)
    x, y = as_point(x), as_point(y)
    if abs(x - y) <= 1e-14:
        raise DegenerateInput("ray needs two distinct points")
    require_inside(A, x, y)
    d = y - x
    if isinstance(A, UnitDisk):
        return _disk_exit(x, d)
    return _polygon_exit(x, d, A.array, tol)


def chord(A: Domain, x, y) -> tuple[complex, complex]:
    """Endpoints ``(b, a)`` of the chord through ``x, y``, ordered b, x, y, a."""
    return ray_exit(A, y, x), ray_exit(A, x, y)


def sample_boundary(A: Domain, n: int, window: float = 1.0) -> BoundarySample:
    if n < 2:
        raise DegenerateInput("need at least two boundary samples")
    if isinstance(A, UnitDisk):
        pts = np.exp(2j * np.pi * np.arange(n) / n)
    elif isinstance(A, UpperHalfPlane):
        pts = np.linspace(-window, window, n).astype(np.complex128)
    elif isinstance(A, ConvexPolygon):
        pts = polygon_points(A.array, np.arange(n) * (A.perimeter / n))
    elif isinstance(A, SampledBoundary):
        pts = A.array
    else:
        raise TypeError(f"unknown domain {A!r}")
    return BoundarySample(points=pts, resolution=len(pts))


def polygon_points(verts: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Points at arclength positions ``s`` (taken mod perimeter) along a closed polygon."""
    e = np.roll(verts, -1) - verts
    lens = np.abs(e)
    cum = np.concatenate(([0.0], np.cumsum(lens)))
    s = np.mod(s, cum[-1])
    k = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(verts) - 1)
    return verts[k] + e[k] * ((s - cum[k]) / lens[k])


def domain_from_json(data: dict) -> Domain:
    """Parse ``{"type": ...}`` domain descriptions."""
    kind = data.get("type")
    if kind == "unit_disk":
        return UnitDisk()
    if kind == "upper_half_plane":
        return UpperHalfPlane()
    if kind == "convex_polygon":
        return ConvexPolygon(tuple(complex(float(a), float(b)) for a, b in data["vertices"]))
    if kind == "sampled_boundary":
        pts = tuple(complex(float(a), float(b)) for a, b in data["points"])
        return SampledBoundary(pts, bool(data["bounded"]))
    raise ValueError(f"unknown domain type {kind!r}")


def domain_to_json(A: Domain) -> dict:
    if isinstance(A, UnitDisk):
        return {"type": "unit_disk"}
    if isinstance(A, UpperHalfPlane):
        return {"type": "upper_half_plane"}
    if isinstance(A, ConvexPolygon):
        return {"type": "convex_polygon", "vertices": [[v.real, v.imag] for v in A.vertices]}
    if isinstance(A, SampledBoundary):
        return {
            "type": "sampled_boundary",
            "points": [[p.real, p.imag] for p in A.points],
            "bounded": A.bounded,
        }
    raise TypeError(f"unknown domain {A!r}")
