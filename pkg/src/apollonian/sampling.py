"""Seeded random inputs for the property suites and the CLI."""

from __future__ import annotations

import numpy as np

from .domains import ConvexPolygon, boundary_distance, contains
from .geom import Similarity


def disk_points(rng: np.random.Generator, n: int, rmax: float = 0.98) -> np.ndarray:
    """Uniform points in the disk of radius ``rmax``."""
    r = rmax * np.sqrt(rng.uniform(size=n))
    return r * np.exp(2j * np.pi * rng.uniform(size=n))


def halfplane_points(
    rng: np.random.Generator, n: int, re: float = 2.0, im: tuple = (0.1, 3.0)
) -> np.ndarray:
    return rng.uniform(-re, re, size=n) + 1j * rng.uniform(*im, size=n)


def similarity(rng: np.random.Generator) -> Similarity:
    return Similarity(
        scale=float(np.exp(rng.uniform(-1.5, 1.5))),
        rotation=complex(np.exp(2j * np.pi * rng.uniform())),
        translation=complex(rng.normal(scale=3.0), rng.normal(scale=3.0)),
        reflect=bool(rng.integers(2)),
    )


def convex_polygon(rng: np.random.Generator, kmin: int = 3, kmax: int = 9,
                   min_gap: float = 0.15) -> ConvexPolygon:
    """Random polygon inscribed in an ellipse, then moved by a random similarity."""
    k = int(rng.integers(kmin, kmax + 1))
    while True:
        theta = np.sort(rng.uniform(0, 2 * np.pi, size=k))
        gaps = np.diff(np.concatenate((theta, [theta[0] + 2 * np.pi])))
        if gaps.min() > min_gap and gaps.max() < np.pi - min_gap:
            break
    aspect = rng.uniform(0.5, 1.0)
    pts = np.cos(theta) + 1j * aspect * np.sin(theta)
    s = similarity(rng)
    return ConvexPolygon.from_points([s(p) for p in pts])


def polygon_points_inside(rng: np.random.Generator, poly: ConvexPolygon, n: int,
                          margin: float = 0.02) -> np.ndarray:
    """Uniform interior points at least ``margin * diameter`` from the boundary."""
    v = poly.array
    lo_x, hi_x = v.real.min(), v.real.max()
    lo_y, hi_y = v.imag.min(), v.imag.max()
    diam = float(np.abs(v[:, None] - v[None, :]).max())
    out: list[complex] = []
    while len(out) < n:
        z = complex(rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y))
        if contains(poly, z) and boundary_distance(poly, z) > margin * diam:
            out.append(z)
    return np.array(out)
