"""Boundary-supremum kernels.

Every kernel maximizes ``log|x - a| - log|y - a|`` (or a Poisson-kernel
log-ratio) over a discretized boundary and, where the boundary is a curve,
polishes the best sample by ternary search on the curve parameter.

Two implementations share one contract: loop kernels compiled with numba,
and vectorized numpy kernels.  ``APOLLONIAN_DISABLE_NUMBA=1`` (or a missing
numba install) selects numpy.  Both are importable as :data:`numba_impl` and
:data:`numpy_impl` for benchmarking.
"""

from __future__ import annotations

import bisect
import math
import os
from types import SimpleNamespace

import numpy as np

_MAX_TERNARY = 200

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

HAVE_NUMBA = njit is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("APOLLONIAN_DISABLE_NUMBA", "0") in ("", "0")


# ---------------------------------------------------------------- numpy path

def _logratio(x, y, a):
    return math.log(abs(x - a) / abs(y - a))


def _ternary(f, lo, hi, tol):
    for _ in range(_MAX_TERNARY):
        if hi - lo < tol:
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if f(m1) < f(m2):
            lo = m1
        else:
            hi = m2
    t = 0.5 * (lo + hi)
    return f(t), t


def _np_circle_max(x, y, n, tol):
    theta = 2.0 * np.pi * np.arange(n) / n
    a = np.exp(1j * theta)
    vals = np.log(np.abs(x - a) / np.abs(y - a))
    k = int(np.argmax(vals))
    h = 2.0 * np.pi / n
    v, t = _ternary(
        lambda s: _logratio(x, y, complex(math.cos(s), math.sin(s))),
        theta[k] - h, theta[k] + h, tol,
    )
    if v < vals[k]:
        return float(vals[k]), float(theta[k])
    return v, t


def _np_segment_max(x, y, p0, u, length, n, tol):
    t = np.linspace(0.0, length, n)
    a = p0 + u * t
    vals = np.log(np.abs(x - a) / np.abs(y - a))
    k = int(np.argmax(vals))
    h = length / (n - 1)
    v, s = _ternary(
        lambda s: _logratio(x, y, p0 + u * s),
        max(t[k] - h, 0.0), min(t[k] + h, length), tol,
    )
    if v < vals[k]:
        return float(vals[k]), float(t[k])
    return v, s


def _np_polygon_max(x, y, verts, n, tol):
    e = np.roll(verts, -1) - verts
    lens = np.abs(e)
    cum = np.concatenate(([0.0], np.cumsum(lens)))
    per = cum[-1]
    s = np.arange(n) * (per / n)
    k = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(verts) - 1)
    a = verts[k] + e[k] * ((s - cum[k]) / lens[k])
    vals = np.log(np.abs(x - a) / np.abs(y - a))

    cum_l = cum.tolist()
    nv = len(verts)

    def point(t):
        t = t % per
        j = min(max(bisect.bisect_right(cum_l, t) - 1, 0), nv - 1)
        return complex(verts[j] + e[j] * ((t - cum_l[j]) / lens[j]))

    best_v, best_s = -math.inf, 0.0
    vv = np.log(np.abs(x - verts) / np.abs(y - verts))
    j = int(np.argmax(vv))
    best_v, best_s = float(vv[j]), float(cum[j])

    h = per / n
    peaks = np.flatnonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))
    for k in peaks:
        v, t = _ternary(lambda t: _logratio(x, y, point(t)), s[k] - h, s[k] + h, tol)
        if v < vals[k]:
            v, t = float(vals[k]), float(s[k])
        if v > best_v:
            best_v, best_s = v, t % per
    return best_v, best_s


def _np_points_max(x, y, pts):
    vals = np.log(np.abs(x - pts) / np.abs(y - pts))
    k = int(np.argmax(vals))
    return float(vals[k]), k


def _np_poisson_max(x, y, n):
    zeta = np.exp(2j * np.pi * np.arange(n) / n)
    lx = math.log(1.0 - abs(x) ** 2) - 2.0 * np.log(np.abs(x - zeta))
    ly = math.log(1.0 - abs(y) ** 2) - 2.0 * np.log(np.abs(y - zeta))
    return float(np.max(np.abs(lx - ly)))


numpy_impl = SimpleNamespace(
    name="numpy",
    circle_max=_np_circle_max,
    segment_max=_np_segment_max,
    polygon_max=_np_polygon_max,
    points_max=_np_points_max,
    poisson_max=_np_poisson_max,
)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    _jit = njit(cache=True)
else:  # pragma: no cover
    def _jit(fn):
        return fn


_ANCHOR = 64  # re-seed the rotation recurrence with exact cos/sin this often


@_jit
def _nb_ratio2(x, y, a):
    # squared distance ratio; monotone in the log-ratio, so scans skip log/sqrt
    dx = x - a
    dy = y - a
    return (dx.real * dx.real + dx.imag * dx.imag) / (dy.real * dy.real + dy.imag * dy.imag)


@_jit
def _nb_circle_f(x, y, s):
    return _nb_ratio2(x, y, complex(math.cos(s), math.sin(s)))


@_jit
def _nb_circle_max(x, y, n, tol):
    h = 2.0 * math.pi / n
    step = complex(math.cos(h), math.sin(h))
    best = -1.0
    kbest = 0
    a = 1.0 + 0.0j
    for k in range(n):
        if k % _ANCHOR == 0:
            a = complex(math.cos(k * h), math.sin(k * h))
        v = _nb_ratio2(x, y, a)
        if v > best:
            best = v
            kbest = k
        a = a * step
    best = _nb_circle_f(x, y, kbest * h)
    lo = kbest * h - h
    hi = kbest * h + h
    for _ in range(_MAX_TERNARY):
        if hi - lo < tol:
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if _nb_circle_f(x, y, m1) < _nb_circle_f(x, y, m2):
            lo = m1
        else:
            hi = m2
    t = 0.5 * (lo + hi)
    v = _nb_circle_f(x, y, t)
    if v < best:
        return 0.5 * math.log(best), kbest * h
    return 0.5 * math.log(v), t


@_jit
def _nb_segment_max(x, y, p0, u, length, n, tol):
    h = length / (n - 1)
    best = -1.0
    kbest = 0
    for k in range(n):
        v = _nb_ratio2(x, y, p0 + u * (k * h))
        if v > best:
            best = v
            kbest = k
    lo = max(kbest * h - h, 0.0)
    hi = min(kbest * h + h, length)
    for _ in range(_MAX_TERNARY):
        if hi - lo < tol:
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if _nb_ratio2(x, y, p0 + u * m1) < _nb_ratio2(x, y, p0 + u * m2):
            lo = m1
        else:
            hi = m2
    t = 0.5 * (lo + hi)
    v = _nb_ratio2(x, y, p0 + u * t)
    if v < best:
        return 0.5 * math.log(best), kbest * h
    return 0.5 * math.log(v), t


@_jit
def _nb_polygon_point(verts, e, lens, cum, per, t):
    t = t % per
    nv = verts.shape[0]
    j = np.searchsorted(cum, t, side="right") - 1
    if j < 0:
        j = 0
    if j > nv - 1:
        j = nv - 1
    return verts[j] + e[j] * ((t - cum[j]) / lens[j])


@_jit
def _nb_polygon_f(x, y, verts, e, lens, cum, per, t):
    return _nb_ratio2(x, y, _nb_polygon_point(verts, e, lens, cum, per, t))


@_jit
def _nb_polygon_max(x, y, verts, n, tol):
    nv = verts.shape[0]
    e = np.empty(nv, dtype=np.complex128)
    lens = np.empty(nv)
    cum = np.zeros(nv + 1)
    for i in range(nv):
        e[i] = verts[(i + 1) % nv] - verts[i]
        lens[i] = abs(e[i])
        cum[i + 1] = cum[i] + lens[i]
    per = cum[nv]
    h = per / n
    vals = np.empty(n)
    j = 0
    for k in range(n):
        s = k * h
        while j < nv - 1 and s >= cum[j + 1]:
            j += 1
        vals[k] = _nb_ratio2(x, y, verts[j] + e[j] * ((s - cum[j]) / lens[j]))

    best = -1.0
    best_s = 0.0
    for i in range(nv):
        v = _nb_ratio2(x, y, verts[i])
        if v > best:
            best = v
            best_s = cum[i]
    for k in range(n):
        if vals[k] < vals[k - 1] or vals[k] < vals[(k + 1) % n]:
            continue
        lo = k * h - h
        hi = k * h + h
        for _ in range(_MAX_TERNARY):
            if hi - lo < tol:
                break
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if _nb_polygon_f(x, y, verts, e, lens, cum, per, m1) < _nb_polygon_f(
                x, y, verts, e, lens, cum, per, m2
            ):
                lo = m1
            else:
                hi = m2
        t = 0.5 * (lo + hi)
        v = _nb_polygon_f(x, y, verts, e, lens, cum, per, t)
        if v < vals[k]:
            v = vals[k]
            t = k * h
        if v > best:
            best = v
            best_s = t % per
    return 0.5 * math.log(best), best_s


@_jit
def _nb_points_max(x, y, pts):
    best = -1.0
    kbest = 0
    for k in range(pts.shape[0]):
        v = _nb_ratio2(x, y, pts[k])
        if v > best:
            best = v
            kbest = k
    return 0.5 * math.log(best), kbest


@_jit
def _nb_poisson_max(x, y, n):
    # |c - log r| peaks where the squared ratio r is extreme
    c = math.log((1.0 - abs(x) ** 2) / (1.0 - abs(y) ** 2))
    h = 2.0 * math.pi / n
    step = complex(math.cos(h), math.sin(h))
    rmax = 0.0
    rmin = np.inf
    z = 1.0 + 0.0j
    for k in range(n):
        if k % _ANCHOR == 0:
            z = complex(math.cos(k * h), math.sin(k * h))
        r = _nb_ratio2(y, x, z)
        if r > rmax:
            rmax = r
        if r < rmin:
            rmin = r
        z = z * step
    return max(abs(c + math.log(rmax)), abs(c + math.log(rmin)))


numba_impl = SimpleNamespace(
    name="numba",
    circle_max=_nb_circle_max,
    segment_max=_nb_segment_max,
    polygon_max=_nb_polygon_max,
    points_max=_nb_points_max,
    poisson_max=_nb_poisson_max,
) if HAVE_NUMBA else None

active = numba_impl if USE_NUMBA else numpy_impl


def circle_max(x: complex, y: complex, n: int, tol: float):
    """Max over the unit circle; returns ``(value, angle)``."""
    v, t = active.circle_max(complex(x), complex(y), int(n), float(tol))
    return float(v), float(t)


def segment_max(x, y, p0, u, length, n, tol):
    """Max over the segment ``p0 + u*t``, ``0 <= t <= length``; returns ``(value, t)``."""
    v, t = active.segment_max(
        complex(x), complex(y), complex(p0), complex(u), float(length), int(n), float(tol)
    )
    return float(v), float(t)


def polygon_max(x, y, verts: np.ndarray, n: int, tol: float):
    """Max over a closed polygon; returns ``(value, arclength from vertex 0)``."""
    v, t = active.polygon_max(complex(x), complex(y), verts, int(n), float(tol))
    return float(v), float(t)


def points_max(x, y, pts: np.ndarray):
    v, k = active.points_max(complex(x), complex(y), pts)
    return float(v), int(k)


def poisson_max(x, y, n: int) -> float:
    return float(active.poisson_max(complex(x), complex(y), int(n)))
