"""Acceptance criteria 1-11, at their full sample counts and tolerances.

Each criterion prints one ``PASS``/``FAIL`` line.  Run under pytest, or
directly with ``python3 tests/test_acceptance.py`` for the summary alone.
"""

from __future__ import annotations

import functools
import itertools
import math
import sys

import numpy as np
import pytest

from apollonian import sampling
from apollonian.domains import UnitDisk, UpperHalfPlane
from apollonian.geodesics import geodesic_arc_disk, sample_arc, verify_geodesic
from apollonian.geom import Circle, cross_ratio, disk_swap, invert_unit_circle
from apollonian.metrics import (
    apollonian,
    apollonian_disk,
    apollonian_halfplane,
    apollonian_oracle,
    circle_affine_extrema,
    extremal_points_disk,
    funk,
    half_apollonian,
    hilbert,
    i_weak,
    mobius_invariance_witness,
    part_affine,
    part_harmonic_disk,
    poincare_disk,
    poincare_halfplane,
    s_symmetrize,
    sigma_symmetrize,
)

D, H = UnitDisk(), UpperHalfPlane()
SEED = 20240601


def rng(offset: int) -> np.random.Generator:
    return np.random.default_rng(SEED + offset)


def _worst(pairs):
    return max((abs(a - b) for a, b in pairs), default=0.0)


@functools.lru_cache(maxsize=None)
def polygon_pool(n_poly: int = 100, n_pts: int = 12):
    """Random polygons with interior points and every ordered-pair oracle distance."""
    g = rng(700)
    pool = []
    for _ in range(n_poly):
        poly = sampling.convex_polygon(g)
        pts = [complex(p) for p in sampling.polygon_points_inside(g, poly, n_pts)]
        dist = {(i, j): apollonian_oracle(poly, pts[i], pts[j])[0]
                for i in range(n_pts) for j in range(n_pts)}
        pool.append((poly, pts, dist))
    return pool


# ------------------------------------------------------------------- criteria

def criterion_1():
    g = rng(1)
    xs, ys = sampling.disk_points(g, 500, 0.98), sampling.disk_points(g, 500, 0.98)
    err = _worst((apollonian_disk(x, y), apollonian_oracle(D, x, y, 4096)[0]) for x, y in zip(xs, ys))
    return err <= 1e-8, f"disk closed form vs oracle, 500 pairs: max err {err:.2e} (tol 1e-8)"


def criterion_2():
    g = rng(2)
    xs, ys = sampling.halfplane_points(g, 500), sampling.halfplane_points(g, 500)
    # closed(x, y) is the supremum with roles swapped, so compare against oracle(y, x)
    err = _worst((apollonian_halfplane(x, y), apollonian_oracle(H, y, x, 4096)[0]) for x, y in zip(xs, ys))
    s, t = g.uniform(0.05, 5, 500), g.uniform(0.05, 5, 500)
    vert = _worst((apollonian_halfplane(1j * a, 1j * b), max(0.0, math.log(b / a))) for a, b in zip(s, t))
    ok = err <= 1e-8 and vert <= 1e-12
    return ok, f"half-plane closed form vs oracle: {err:.2e} (tol 1e-8); vertical max(0, log t/s): {vert:.2e} (tol 1e-12)"


def criterion_3():
    checks = [
        (apollonian_disk(0.5, 0), math.log(1.5)),
        (apollonian_disk(0, 0.5), math.log(2)),
        (apollonian_halfplane(1j, 2j), math.log(2)),
        (apollonian_halfplane(2j, 1j), 0.0),
    ]
    err = _worst(checks)
    return err <= 1e-12, f"golden values delta_D(.5,0), delta_D(0,.5), delta_H(i,2i), delta_H(2i,i): max err {err:.2e}"


def criterion_4():
    g = rng(4)
    xs, ys = sampling.disk_points(g, 1000, 0.98), sampling.disk_points(g, 1000, 0.98)
    hx, hy = sampling.halfplane_points(g, 1000), sampling.halfplane_points(g, 1000)
    S_disk = s_symmetrize(apollonian_disk)
    S_half = s_symmetrize(apollonian_halfplane)
    errs = {}
    errs["S(delta_D)=h_D"] = _worst((S_disk(x, y), poincare_disk(x, y)) for x, y in zip(xs, ys))
    errs["S(delta_H)=h_H"] = _worst((S_half(x, y), poincare_halfplane(x, y)) for x, y in zip(hx, hy))

    fd = functools.partial(funk, D)
    errs["H=SF disk"] = _worst((hilbert(D, x, y), s_symmetrize(fd)(x, y)) for x, y in zip(xs, ys))
    errs["p=sigmaF disk"] = _worst((part_affine(D, x, y), sigma_symmetrize(fd)(x, y)) for x, y in zip(xs, ys))
    poly_h, poly_p = [], []
    for _ in range(20):
        poly = sampling.convex_polygon(g)
        fp = functools.partial(funk, poly)
        pts = sampling.polygon_points_inside(g, poly, 100)
        for x, y in zip(pts[:50], pts[50:]):
            poly_h.append((hilbert(poly, x, y), s_symmetrize(fp)(x, y)))
            poly_p.append((part_affine(poly, x, y), sigma_symmetrize(fp)(x, y)))
    errs["H=SF polygons"] = _worst(poly_h)
    errs["p=sigmaF polygons"] = _worst(poly_p)

    # eta from its own definition, sup |log ratio|, via the two extremal points
    eta_rows, sandwich = [], 0.0
    for x, y in zip(xs, ys):
        if abs(x - y) < 1e-12:
            continue
        hi, lo = extremal_points_disk(x, y)
        eta_direct = max(math.log(hi.achieved), -math.log(lo.achieved))
        eta_rows.append((half_apollonian(D, x, y), eta_direct))
        eta_rows.append((sigma_symmetrize(apollonian_disk)(x, y), eta_direct))
        s, m = S_disk(x, y), sigma_symmetrize(apollonian_disk)(x, y)
        sandwich = max(sandwich, s - m, m - 2 * s)
    errs["eta=sigma(delta)"] = _worst(eta_rows)
    for x, y in zip(hx, hy):
        s, m = S_half(x, y), sigma_symmetrize(apollonian_halfplane)(x, y)
        sandwich = max(sandwich, s - m, m - 2 * s)
    worst = max(errs.values())
    ok = worst <= 1e-12 and sandwich <= 1e-12
    detail = ", ".join(f"{k} {v:.1e}" for k, v in errs.items())
    return ok, f"symmetrization identities (tol 1e-12): {detail}; sandwich violation {max(sandwich, 0):.1e}"


def criterion_5():
    g = rng(5)
    xs, ys = sampling.disk_points(g, 1000, 0.98), sampling.disk_points(g, 1000, 0.98)
    grid = np.exp(2j * np.pi * np.arange(100_000) / 100_000)
    on_circle = value_err = beat = 0.0
    for x, y in zip(xs, ys):
        if abs(x - y) < 1e-9:
            continue
        hi, lo = extremal_points_disk(x, y)
        on_circle = max(on_circle, abs(abs(hi.point) - 1), abs(abs(lo.point) - 1))
        w = abs(x * np.conj(y) - 1)
        den = 1 - abs(y) ** 2
        vmax, vmin = (abs(x - y) + w) / den, abs(abs(x - y) - w) / den
        value_err = max(value_err,
                        abs(abs(x - hi.point) / abs(y - hi.point) - vmax),
                        abs(abs(x - lo.point) / abs(y - lo.point) - vmin))
        r = np.abs(x - grid) / np.abs(y - grid)
        beat = max(beat, r.max() - hi.achieved, lo.achieved - r.min())
    lemma = 0.0
    for lam, mu in zip(sampling.disk_points(g, 100, 3.0), sampling.disk_points(g, 100, 3.0)):
        zmax, vmax, zmin, vmin = circle_affine_extrema(lam, mu)
        vals = np.abs(lam * (mu * grid + 1))
        lemma = max(lemma, vals.max() - vmax, vmin - vals.min(),
                    abs(abs(lam * (mu * zmax + 1)) - vmax), abs(abs(lam * (mu * zmin + 1)) - vmin))
    ok = on_circle <= 1e-12 and value_err <= 1e-10 and beat <= 1e-9 and lemma <= 1e-9
    return ok, (f"extremal points: |a|-1 {on_circle:.1e} (1e-12), values {value_err:.1e} (1e-10), "
                f"grid excess {max(beat, 0):.1e} (1e-9), lemma {max(lemma, 0):.1e} (1e-9)")


def criterion_6():
    g = rng(6)
    xs, ys = sampling.disk_points(g, 200, 0.95), sampling.disk_points(g, 200, 0.95)
    defect = ortho = exit_err = cr_err = 0.0
    for x, y in zip(xs, ys):
        x, y = complex(x), complex(y)
        arc = geodesic_arc_disk(x, y)
        pts = sample_arc(arc, 8)
        defect = max(defect, verify_geodesic(pts, apollonian_disk, max_triples=10**6).max_defect)
        s = arc.support
        ortho = max(ortho, abs(abs(s.center) ** 2 - s.radius**2 - 1) if isinstance(s, Circle)
                    else abs(s.point.real * s.direction.imag - s.point.imag * s.direction.real))
        a_plus = extremal_points_disk(x, y)[0].point
        exit_err = max(exit_err, abs(arc.exit - a_plus))
        if abs(y) > 1e-12:
            expect = 1 + abs(x - y) / abs(x * y.conjugate() - 1)
            cr_err = max(cr_err, abs(cross_ratio(x, y, a_plus, invert_unit_circle(y)) - expect))
    ok = defect <= 1e-9 and ortho <= 1e-10 and exit_err <= 1e-8 and cr_err <= 1e-10
    return ok, (f"geodesics, 200 arcs x 56 triples: defect {defect:.1e} (1e-9), orthogonality {ortho:.1e} (1e-10), "
                f"exit vs a+ {exit_err:.1e} (1e-8), cross-ratio {cr_err:.1e} (1e-10)")


def _triangle_lo(d, triples):
    return min(d(x, y) + d(y, z) - d(x, z) for x, y, z in triples)


def criterion_7():
    g = rng(7)
    n = 10_000
    out = {}
    dt = list(zip(*(sampling.disk_points(g, n, 0.98) for _ in range(3))))
    ht = list(zip(*(sampling.halfplane_points(g, n) for _ in range(3))))
    out["i disk"] = _triangle_lo(functools.partial(i_weak, D), dt)
    out["i half-plane"] = _triangle_lo(functools.partial(i_weak, H), ht)
    out["funk disk"] = _triangle_lo(functools.partial(funk, D), dt)
    out["apollonian disk"] = _triangle_lo(apollonian_disk, dt)
    out["apollonian half-plane"] = _triangle_lo(functools.partial(apollonian, H), ht)

    pool = polygon_pool()
    per = n // len(pool)
    lo_i = lo_f = lo_a = math.inf
    for poly, pts, dist in pool:
        ordered = list(itertools.permutations(range(len(pts)), 3))
        pick = g.choice(len(ordered), size=per, replace=False)
        for k in pick:
            i, j, m = ordered[k]
            x, y, z = pts[i], pts[j], pts[m]
            lo_a = min(lo_a, dist[i, j] + dist[j, m] - dist[i, m])
            lo_i = min(lo_i, i_weak(poly, x, y) + i_weak(poly, y, z) - i_weak(poly, x, z))
            lo_f = min(lo_f, funk(poly, x, y) + funk(poly, y, z) - funk(poly, x, z))
    out["i polygons"], out["funk polygons"], out["apollonian polygons"] = lo_i, lo_f, lo_a

    diag = []
    for x, y, z in dt[:1000]:
        diag += [apollonian_disk(x, x), funk(D, x, x), i_weak(D, x, x)]
    for x, y, z in ht[:1000]:
        diag += [apollonian(H, x, x), apollonian_oracle(H, x, x)[0], i_weak(H, x, x)]
    for poly, pts, dist in pool:
        diag += [dist[i, i] for i in range(len(pts))]
        diag += [funk(poly, p, p) for p in pts]
    worst = min(out.values())
    ok = worst >= -1e-9 and all(v == 0.0 for v in diag)
    detail = ", ".join(f"{k} {v:.1e}" for k, v in out.items())
    return ok, f"triangle inequality, 1e4 triples each (min slack >= -1e-9): {detail}; d(x,x)=0 exact: {all(v == 0.0 for v in diag)}"


def criterion_8():
    g = rng(8)
    n = 10_000
    xs, ys = sampling.disk_points(g, n, 0.98), sampling.disk_points(g, n, 0.98)
    hx, hy = sampling.halfplane_points(g, n), sampling.halfplane_points(g, n)
    excess = {
        "disk": max(apollonian_disk(x, y) - i_weak(D, y, x) for x, y in zip(xs, ys)),
        "half-plane": max(apollonian(H, x, y) - i_weak(H, y, x) for x, y in zip(hx, hy)),
    }
    pool = polygon_pool()
    poly_ex = []
    for poly, pts, dist in pool:
        for (i, j), v in dist.items():
            if i != j:
                poly_ex.append(v - i_weak(poly, pts[j], pts[i]))
    excess["polygons"] = max(poly_ex[:n]) if len(poly_ex) >= n else math.inf
    ok = max(excess.values()) <= 1e-12
    detail = ", ".join(f"{k} {v:.1e}" for k, v in excess.items())
    return ok, f"delta(x,y) <= i(y,x) + 1e-12 on 1e4 pairs per domain: max excess {detail}"


def criterion_9():
    g = rng(9)
    sim_err = 0.0
    for _ in range(20):
        poly = sampling.convex_polygon(g)
        s = sampling.similarity(g)
        img = poly.transformed(s)
        for x, y in sampling.polygon_points_inside(g, poly, 20).reshape(10, 2):
            sim_err = max(sim_err, abs(apollonian_oracle(img, s(x), s(y))[0] - apollonian_oracle(poly, x, y)[0]))
    wit = mobius_invariance_witness(seed=SEED, trials=1000)
    m = disk_swap(0, 0.5)
    analytic = abs(apollonian_disk(0, 0.5) - apollonian_disk(m(0), m(0.5)))
    target = abs(math.log(2) - math.log(1.5))
    ok = sim_err <= 1e-8 and wit.defect > 0.1 and abs(analytic - target) <= 1e-12 and analytic > 0.1
    return ok, (f"similarity invariance on 20 polygons {sim_err:.1e} (1e-8); Möbius witness defect {wit.defect:.3f} (>0.1); "
                f"swap of (0, 0.5) gives {analytic:.6f} vs |log 2 - log 1.5| = {target:.6f}")


def criterion_10():
    g = rng(10)
    xs, ys = sampling.disk_points(g, 200, 0.9), sampling.disk_points(g, 200, 0.9)
    harm = _worst((part_harmonic_disk(x, y, 4096), 2 * poincare_disk(x, y)) for x, y in zip(xs, ys))
    exact = all(part_affine(D, x, y) == max(funk(D, x, y), funk(D, y, x)) for x, y in zip(xs, ys))
    ok = harm <= 1e-4 and exact
    return ok, f"part metrics: harmonic vs 2*poincare on 200 pairs {harm:.1e} (1e-4); affine == max directed Funk: {exact}"


def criterion_11():
    g = rng(11)
    n = 10_000
    xs, ys = sampling.disk_points(g, n, 0.98), sampling.disk_points(g, n, 0.98)
    distinct = [(x, y) for x, y in zip(xs, ys) if x != y]
    funk_min = min(funk(D, x, y) for x, y in distinct)
    weak_min = min(max(apollonian_disk(x, y), apollonian_disk(y, x)) for x, y in distinct)
    witness = apollonian_halfplane(2j, 1j)
    oracle_witness = apollonian_oracle(H, 1j, 2j)[0]
    ok = funk_min > 0 and weak_min > 0 and witness == 0.0 and oracle_witness == 0.0
    return ok, (f"separation: min Funk {funk_min:.2e} > 0 on {len(distinct)} pairs; min sigma-delta_D {weak_min:.2e} > 0; "
                f"half-plane witness delta_H(2i, i) = {witness} with 2i != i")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def _line(k: int, ok: bool, detail: str) -> str:
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(ok)
        print(_line(k, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
