"""Weak metrics on planar domains and their symmetrizations.

All distances are directed: ``metric(A, x, y)`` is the distance *from* x
*to* y.  Values within ``Config.zero_clamp`` of zero are returned as 0.0.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import _kernels
from .domains import (
    Domain,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    chord,
    convex_body,
    ray_exit,
    require_eligible,
    require_inside,
)
from .errors import DegenerateInput, PointOutsideDomain, SearchFailed
from .geom import MobiusMap, as_point, disk_automorphism
from .oracle import ExtremalBoundaryPoint, apollonian_oracle, clamp_zero

WeakMetricFn = Callable[[complex, complex], float]

__all__ = [
    "DirectedDistance",
    "ExtremalBoundaryPoint",
    "WeakMetricFn",
    "apollonian",
    "apollonian_disk",
    "apollonian_halfplane",
    "apollonian_oracle",
    "apollonian_semimetric",
    "circle_affine_extrema",
    "extremal_points_disk",
    "funk",
    "half_apollonian",
    "hilbert",
    "i_weak",
    "j_tilde",
    "j_vuorinen",
    "mobius_invariance_witness",
    "part_affine",
    "part_harmonic_disk",
    "poincare_disk",
    "poincare_halfplane",
    "s_symmetrize",
    "sigma_symmetrize",
]


@dataclass(frozen=True)
class DirectedDistance:
    source: complex
    target: complex
    value: float


# ------------------------------------------------------------------ i_A family

def i_weak(A: Domain, x, y) -> float:
    """``log(1 + |x - y| / d(x, boundary))``."""
    x, y = as_point(x), as_point(y)
    require_inside(A, y)
    dx = boundary_distance(A, x)
    return clamp_zero(math.log1p(abs(x - y) / dx))


def j_tilde(A: Domain, x, y) -> float:
    """Mean symmetrization of :func:`i_weak` (Gehring-Osgood metric)."""
    return clamp_zero(0.5 * (i_weak(A, x, y) + i_weak(A, y, x)))


def j_vuorinen(A: Domain, x, y) -> float:
    """``log(1 + |x - y| / min(d(x), d(y)))``, the max symmetrization of :func:`i_weak`."""
    x, y = as_point(x), as_point(y)
    d = min(boundary_distance(A, x), boundary_distance(A, y))
    return clamp_zero(math.log1p(abs(x - y) / d))


# ------------------------------------------------------- Funk and relatives

def funk(A: Domain, x, y) -> float:
    """Funk weak metric ``log(|x - a|/|y - a|)``, ``a`` the exit of the ray x -> y."""
    A = convex_body(A)
    x, y = as_point(x), as_point(y)
    require_inside(A, x, y)
    if abs(x - y) <= 1e-14:
        return 0.0
    a = ray_exit(A, x, y)
    return clamp_zero(math.log(abs(x - a) / abs(y - a)))


def _chord_logs(A, x, y):
    b, a = chord(A, x, y)
    return math.log(abs(x - a) / abs(y - a)), math.log(abs(y - b) / abs(x - b))


def hilbert(A: Domain, x, y) -> float:
    """Klein-Hilbert metric: half the log of the cross-ratio ``[b, x, y, a]``."""
    A = convex_body(A)
    x, y = as_point(x), as_point(y)
    require_inside(A, x, y)
    if abs(x - y) <= 1e-14:
        return 0.0
    fwd, back = _chord_logs(A, x, y)
    return clamp_zero(0.5 * (fwd + back))


def part_affine(A: Domain, x, y) -> float:
    """Part metric of the positive affine functions on a bounded convex domain."""
    A = convex_body(A)
    x, y = as_point(x), as_point(y)
    require_inside(A, x, y)
    if abs(x - y) <= 1e-14:
        return 0.0
    return clamp_zero(max(_chord_logs(A, x, y)))


def part_harmonic_disk(x, y, n_angles: int = 4096) -> float:
    """Harmonic part metric of the unit disk, over sampled Poisson kernels.

    The positive harmonic functions on the disk are averages of Poisson
    kernels ``P(z, zeta) = (1 - |z|^2)/|z - zeta|^2``, so the supremum of
    ``|log u(x)/u(y)|`` is approached by single kernels.  This is a numerical
    reduction; its limit should be twice :func:`poincare_disk`.
    """
    x, y = as_point(x), as_point(y)
    require_inside(UnitDisk(), x, y)
    if abs(x - y) <= 1e-14:
        return 0.0
    return clamp_zero(_kernels.poisson_max(x, y, n_angles))


# ------------------------------------------------------ Apollonian weak metric

def apollonian_halfplane(x, y) -> float:
    """Closed form ``log((|y - conj x| + |y - x|) / |x - conj x|)`` on the upper half-plane.

    Note the argument order: this expression equals the boundary supremum
    of ``log(|y - a|/|x - a|)``, i.e. ``apollonian_oracle(H, y, x)``.  With
    x = i s, y = i t it reduces to ``max(0, log(t/s))``.
    """
    x, y = as_point(x), as_point(y)
    require_inside(UpperHalfPlane(), x, y)
    num = abs(y - x.conjugate()) + abs(y - x)
    return clamp_zero(math.log(num / (2.0 * x.imag)))


def apollonian_disk(x, y) -> float:
    """Closed form ``log((|x - y| + |x conj(y) - 1|) / (1 - |y|^2))`` on the unit disk."""
    x, y = as_point(x), as_point(y)
    require_inside(UnitDisk(), x, y)
    r = abs(y)
    num = abs(x - y) + abs(x * y.conjugate() - 1.0)
    return clamp_zero(math.log(num / ((1.0 - r) * (1.0 + r))))


def apollonian(A: Domain, x, y, n: int | None = None) -> float:
    """Apollonian weak metric in the supremum convention, closed form when known."""
    if isinstance(A, UnitDisk):
        return apollonian_disk(x, y)
    if isinstance(A, UpperHalfPlane):
        return apollonian_halfplane(y, x)
    return apollonian_oracle(A, x, y, n)[0]


def extremal_points_disk(x, y) -> tuple[ExtremalBoundaryPoint, ExtremalBoundaryPoint]:
    """Maximizer and minimizer of ``|x - a|/|y - a|`` on the unit circle."""
    x, y = as_point(x), as_point(y)
    require_inside(UnitDisk(), x, y)
    if abs(x - y) <= 1e-14:
        raise DegenerateInput("extremal points need x != y")
    yb = y.conjugate()
    dxy = abs(x - y)
    w = x * yb - 1.0
    aw = abs(w)
    p = dxy * w
    q = (x - y) * aw
    a_plus = (p * y + q) / (p + q * yb)
    a_minus = (p * y - q) / (p - q * yb)
    den = 1.0 - abs(y) ** 2
    vmax = (dxy + aw) / den
    vmin = abs(dxy - aw) / den
    return (
        ExtremalBoundaryPoint(a_plus, vmax, "max"),
        ExtremalBoundaryPoint(a_minus, vmin, "min"),
    )


def circle_affine_extrema(lam, mu) -> tuple[complex, float, complex, float]:
    """Extrema of ``|lam * (mu * z + 1)|`` over the unit circle.

    Returns ``(z_max, v_max, z_min, v_min)`` with ``z_max = |mu|/mu``.
    """
    lam, mu = complex(lam), complex(mu)
    if abs(mu) < 1e-14:
        raise DegenerateInput("mu must be nonzero")
    u = abs(mu) / mu
    return u, abs(lam) * (abs(mu) + 1.0), -u, abs(lam) * abs(abs(mu) - 1.0)


# ------------------------------------------------------------ symmetrizations

def sigma_symmetrize(d: WeakMetricFn) -> WeakMetricFn:
    """Max symmetrization ``max(d(x, y), d(y, x))``."""

    @functools.wraps(d)
    def sym(x, y):
        return max(d(x, y), d(y, x))

    return sym


def s_symmetrize(d: WeakMetricFn) -> WeakMetricFn:
    """Mean symmetrization ``(d(x, y) + d(y, x)) / 2``."""

    @functools.wraps(d)
    def sym(x, y):
        return 0.5 * (d(x, y) + d(y, x))

    return sym


def half_apollonian(A: Domain, x, y, n: int | None = None) -> float:
    """``sup_a |log(|x - a|/|y - a|)|``, the max symmetrization of the Apollonian weak metric."""
    require_eligible(A)
    return max(apollonian(A, x, y, n), apollonian(A, y, x, n))


def apollonian_semimetric(A: Domain, x, y, n: int | None = None) -> float:
    """Beardon's two-supremum sum; twice the mean symmetrization."""
    require_eligible(A)
    return clamp_zero(apollonian(A, x, y, n) + apollonian(A, y, x, n))


# -------------------------------------------------------------- Poincaré

def poincare_halfplane(x, y) -> float:
    x, y = as_point(x), as_point(y)
    require_inside(UpperHalfPlane(), x, y)
    s = abs(x - y.conjugate())
    d = abs(x - y)
    # (s - d) rewritten via s^2 - d^2 = 4 Im x Im y
    return clamp_zero(0.5 * math.log((s + d) ** 2 / (4.0 * x.imag * y.imag)))


def poincare_disk(x, y) -> float:
    x, y = as_point(x), as_point(y)
    require_inside(UnitDisk(), x, y)
    s = abs(1.0 - x * y.conjugate())
    d = abs(x - y)
    rx, ry = abs(x), abs(y)
    # (s - d) rewritten via s^2 - d^2 = (1 - |x|^2)(1 - |y|^2)
    prod = (1.0 - rx) * (1.0 + rx) * (1.0 - ry) * (1.0 + ry)
    return clamp_zero(0.5 * math.log((s + d) ** 2 / prod))


# ----------------------------------------------------------- Möbius witness

class MobiusWitness(NamedTuple):
    x: complex
    y: complex
    m: MobiusMap
    defect: float


def _random_disk_point(rng: np.random.Generator, rmax: float) -> complex:
    r = rmax * math.sqrt(rng.uniform())
    return r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))


def mobius_invariance_witness(
    seed: int, trials: int = 1000, threshold: float = 0.1
) -> MobiusWitness:
    """Search for a disk automorphism that changes an Apollonian distance.

    Raises :class:`SearchFailed` if none of ``trials`` random attempts
    changes the distance by more than ``threshold``.
    """
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        x = _random_disk_point(rng, 0.9)
        y = _random_disk_point(rng, 0.9)
        c = _random_disk_point(rng, 0.9)
        rot = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        m = disk_automorphism(c, rot)
        mx, my = m(x), m(y)
        try:
            defect = abs(apollonian_disk(x, y) - apollonian_disk(mx, my))
        except PointOutsideDomain:
            continue  # image pushed within rounding of the circle
        if defect > threshold:
            return MobiusWitness(x, y, m, defect)
    raise SearchFailed(f"no Möbius non-invariance witness in {trials} trials")
