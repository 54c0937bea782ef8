"""Seeded property suites run by ``apollonian check``.

Each suite returns :class:`CheckResult` rows; a row summarizes one property
over its whole random sample (worst error against its tolerance).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import sampling
from .domains import UnitDisk, UpperHalfPlane
from .errors import SearchFailed
from .geodesics import geodesic_arc_disk, sample_arc, verify_geodesic
from .geom import cross_ratio, invert_unit_circle
from .metrics import (
    apollonian,
    apollonian_disk,
    apollonian_halfplane,
    apollonian_oracle,
    apollonian_semimetric,
    circle_affine_extrema,
    extremal_points_disk,
    funk,
    half_apollonian,
    hilbert,
    i_weak,
    j_tilde,
    j_vuorinen,
    mobius_invariance_witness,
    part_affine,
    poincare_disk,
    poincare_halfplane,
)

SUITES = ("axioms", "identities", "extremals", "geodesics", "separation", "invariance")


@dataclass(frozen=True)
class CheckResult:
    case_id: str
    input: str
    expected: float
    actual: float
    abs_error: float
    passed: bool

    def __post_init__(self):
        # numpy scalars would leak into JSON output
        for f in ("expected", "actual", "abs_error"):
            object.__setattr__(self, f, float(getattr(self, f)))
        object.__setattr__(self, "passed", bool(self.passed))


def _max_err(rows, tol, case_id, desc, expected=0.0):
    errs = [abs(a - b) for a, b in rows]
    worst = max(errs) if errs else 0.0
    return CheckResult(case_id, desc, expected, worst, worst, worst <= tol)


def _bound(values, tol, case_id, desc):
    """Every value must be >= -tol; reports the smallest."""
    lo = min(values) if values else 0.0
    return CheckResult(case_id, desc, 0.0, lo, max(0.0, -lo), lo >= -tol)


def _domains(rng, n_poly):
    yield "unit_disk", UnitDisk(), lambda k: sampling.disk_points(rng, k, 0.95)
    yield "upper_half_plane", UpperHalfPlane(), lambda k: sampling.halfplane_points(rng, k)
    for i in range(n_poly):
        poly = sampling.convex_polygon(rng)
        yield f"polygon{i}", poly, lambda k, p=poly: sampling.polygon_points_inside(rng, p, k)


def suite_axioms(seed: int, n: int = 1000, resolution: int = 4096) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out = []
    for name, A, draw in _domains(rng, 2):
        metrics: dict[str, Callable] = {
            "i_weak": functools.partial(i_weak, A),
            "apollonian": functools.partial(apollonian, A, n=resolution),
        }
        if A.bounded:
            metrics["funk"] = functools.partial(funk, A)
        if isinstance(A, UpperHalfPlane):
            metrics["apollonian_closed"] = apollonian_halfplane
        m = n if name in ("unit_disk", "upper_half_plane") else max(n // 5, 1)
        pts = draw(3 * m).reshape(3, m)
        for mname, d in sorted(metrics.items()):
            defects = [d(x, y) + d(y, z) - d(x, z) for x, y, z in pts.T]
            out.append(_bound(defects, 1e-9, f"axioms.triangle.{mname}.{name}", f"{m} triples"))
            diag = [d(x, x) for x in pts[0]]
            out.append(_max_err([(v, 0.0) for v in diag], 0.0,
                                f"axioms.diagonal.{mname}.{name}", f"{m} points"))
        # delta_A(x, y) <= i_A(y, x)
        dual = [i_weak(A, y, x) - apollonian(A, x, y, resolution) for x, y in pts[:2].T]
        out.append(_bound(dual, 1e-12, f"axioms.dual_bound.{name}", f"{m} pairs"))
    return out


def suite_identities(seed: int, n: int = 1000, resolution: int = 4096) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    D, H = UnitDisk(), UpperHalfPlane()
    out = []
    xs, ys = sampling.disk_points(rng, n, 0.98), sampling.disk_points(rng, n, 0.98)
    pairs = list(zip(xs, ys))
    rows = [(0.5 * (apollonian_disk(x, y) + apollonian_disk(y, x)), poincare_disk(x, y))
            for x, y in pairs]
    out.append(_max_err(rows, 1e-12, "identities.S_apollonian_eq_poincare.unit_disk", f"{n} pairs"))
    rows = [(apollonian_semimetric(D, x, y), 2 * poincare_disk(x, y)) for x, y in pairs]
    out.append(_max_err(rows, 1e-12, "identities.alpha_eq_2poincare.unit_disk", f"{n} pairs"))
    rows = [(half_apollonian(D, x, y), max(apollonian_disk(x, y), apollonian_disk(y, x)))
            for x, y in pairs]
    out.append(_max_err(rows, 1e-12, "identities.eta_eq_sigma_apollonian.unit_disk", f"{n} pairs"))
    for name, A, draw in _domains(rng, 3):
        m = n if not name.startswith("polygon") else max(n // 5, 1)
        p = draw(2 * m).reshape(2, m)
        if A.bounded:
            rows = [(hilbert(A, x, y), 0.5 * (funk(A, x, y) + funk(A, y, x))) for x, y in p.T]
            out.append(_max_err(rows, 1e-12, f"identities.H_eq_S_funk.{name}", f"{m} pairs"))
            rows = [(part_affine(A, x, y), max(funk(A, x, y), funk(A, y, x))) for x, y in p.T]
            out.append(_max_err(rows, 1e-12, f"identities.part_affine_eq_sigma_funk.{name}",
                                f"{m} pairs"))
        rows = [(j_vuorinen(A, x, y), max(i_weak(A, x, y), i_weak(A, y, x))) for x, y in p.T]
        out.append(_max_err(rows, 1e-12, f"identities.j_eq_sigma_i.{name}", f"{m} pairs"))
        rows = [(j_tilde(A, x, y), 0.5 * (i_weak(A, x, y) + i_weak(A, y, x))) for x, y in p.T]
        out.append(_max_err(rows, 1e-12, f"identities.j_tilde_eq_S_i.{name}", f"{m} pairs"))
    hx, hy = sampling.halfplane_points(rng, n), sampling.halfplane_points(rng, n)
    rows = [(0.5 * (apollonian_halfplane(x, y) + apollonian_halfplane(y, x)),
             poincare_halfplane(x, y)) for x, y in zip(hx, hy)]
    out.append(_max_err(rows, 1e-12, "identities.S_apollonian_eq_poincare.upper_half_plane",
                        f"{n} pairs"))
    m = max(n // 10, 1)
    rows = [(apollonian_halfplane(y, x), apollonian_oracle(H, x, y, resolution)[0])
            for x, y in zip(hx[:m], hy[:m])]
    out.append(_max_err(rows, 1e-8, "identities.closed_eq_oracle.upper_half_plane", f"{m} pairs"))
    return out


def suite_extremals(seed: int, n: int = 200, grid: int = 100_000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    circle = np.exp(2j * np.pi * np.arange(grid) / grid)
    xs, ys = sampling.disk_points(rng, n, 0.95), sampling.disk_points(rng, n, 0.95)
    mod, val, beat = [], [], []
    for x, y in zip(xs, ys):
        hi, lo = extremal_points_disk(x, y)
        mod += [(abs(hi.point), 1.0), (abs(lo.point), 1.0)]
        val += [(abs(x - hi.point) / abs(y - hi.point), hi.achieved),
                (abs(x - lo.point) / abs(y - lo.point), lo.achieved)]
        f = np.abs(x - circle) / np.abs(y - circle)
        beat += [hi.achieved - f.max(), f.min() - lo.achieved]
    out = [
        _max_err(mod, 1e-12, "extremals.on_circle", f"{n} pairs"),
        _max_err(val, 1e-10, "extremals.values", f"{n} pairs"),
        _bound(beat, 1e-9, "extremals.grid_not_better", f"{n} pairs, {grid} grid"),
    ]
    lam_rows, pt_rows = [], []
    for _ in range(100):
        lam = complex(*rng.normal(size=2))
        mu = complex(*rng.normal(size=2))
        zmax, vmax, zmin, vmin = circle_affine_extrema(lam, mu)
        g = np.abs(lam * (mu * circle + 1))
        lam_rows += [(vmax, g.max()), (vmin, g.min())]
        pt_rows += [(abs(lam * (mu * zmax + 1)), vmax), (abs(lam * (mu * zmin + 1)), vmin)]
    out.append(_max_err(lam_rows, 1e-8, "extremals.lemma_grid", "100 (lambda, mu)"))
    out.append(_max_err(pt_rows, 1e-12, "extremals.lemma_points", "100 (lambda, mu)"))
    return out


def suite_geodesics(seed: int, n: int = 200, k: int = 8) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    xs, ys = sampling.disk_points(rng, n, 0.95), sampling.disk_points(rng, n, 0.95)
    defects, ortho, exits, cr = [], [], [], []
    for x, y in zip(xs, ys):
        arc = geodesic_arc_disk(x, y)
        pts = sample_arc(arc, k)
        defects.append(verify_geodesic(pts, apollonian_disk).max_defect)
        s = arc.support
        if hasattr(s, "radius"):
            ortho.append(abs(abs(s.center) ** 2 - s.radius**2 - 1.0))
        else:
            ortho.append(s.distance(0j))
        a_plus = extremal_points_disk(x, y)[0].point
        exits.append(abs(arc.exit - a_plus))
        if abs(y) > 1e-9:
            expected = 1 + abs(x - y) / abs(x * y.conjugate() - 1)
            cr.append(abs(cross_ratio(x, y, a_plus, invert_unit_circle(y)) - expected))
    return [
        CheckResult("geodesics.aligned_triples", f"{n} arcs x {k} samples", 0.0,
                    max(defects), max(defects), max(defects) <= 1e-9),
        CheckResult("geodesics.orthogonal_support", f"{n} arcs", 0.0,
                    max(ortho), max(ortho), max(ortho) <= 1e-10),
        CheckResult("geodesics.exit_is_a_plus", f"{n} arcs", 0.0,
                    max(exits), max(exits), max(exits) <= 1e-8),
        CheckResult("geodesics.cross_ratio", f"{len(cr)} arcs", 0.0,
                    max(cr), max(cr), max(cr) <= 1e-10),
    ]


def suite_separation(seed: int, n: int = 10_000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    D, H = UnitDisk(), UpperHalfPlane()
    xs, ys = sampling.disk_points(rng, n, 0.95), sampling.disk_points(rng, n, 0.95)
    fmin = min(min(funk(D, x, y), funk(D, y, x)) for x, y in zip(xs, ys))
    dmax = min(max(apollonian_disk(x, y), apollonian_disk(y, x)) for x, y in zip(xs, ys))
    w = apollonian_halfplane(2j, 1j)
    return [
        CheckResult("separation.funk_strong.unit_disk", f"{n} pairs, min of both directions",
                    0.0, fmin, 0.0, fmin > 0.0),
        CheckResult("separation.apollonian_weak.unit_disk", f"{n} pairs, max of both directions",
                    0.0, dmax, 0.0, dmax > 0.0),
        CheckResult("separation.halfplane_not_strong", "delta_H(2i, i) with 2i != i",
                    0.0, w, abs(w), w == 0.0),
        CheckResult("separation.halfplane_oracle_not_strong", "oracle delta_H(i, 2i)",
                    0.0, apollonian_oracle(H, 1j, 2j)[0], apollonian_oracle(H, 1j, 2j)[0],
                    apollonian_oracle(H, 1j, 2j)[0] == 0.0),
    ]


def suite_invariance(seed: int, n: int = 200, resolution: int = 4096) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    apo, fk = [], []
    for _ in range(10):
        poly = sampling.convex_polygon(rng)
        s = sampling.similarity(rng)
        img = poly.transformed(s)
        pts = sampling.polygon_points_inside(rng, poly, 2 * (n // 10)).reshape(2, -1)
        for x, y in pts.T:
            apo.append((apollonian_oracle(poly, x, y, resolution)[0],
                        apollonian_oracle(img, s(x), s(y), resolution)[0]))
            fk.append((funk(poly, x, y), funk(img, s(x), s(y))))
    out = [
        _max_err(apo, 1e-8, "invariance.similarity.apollonian_oracle", f"{len(apo)} pairs"),
        _max_err(fk, 1e-8, "invariance.similarity.funk", f"{len(fk)} pairs"),
    ]
    try:
        wit = mobius_invariance_witness(seed)
        out.append(CheckResult("invariance.mobius_witness", f"x={wit.x:.6g}, y={wit.y:.6g}",
                               0.1, wit.defect, 0.0, wit.defect > 0.1))
    except SearchFailed:
        out.append(CheckResult("invariance.mobius_witness", "1000 trials", 0.1, 0.0, 0.1, False))
    swap = abs(apollonian_disk(0, 0.5) - apollonian_disk(0.5, 0))
    expected = math.log(2) - math.log(1.5)
    out.append(CheckResult("invariance.mobius_swap_0_half", "x=0, y=0.5", expected, swap,
                           abs(swap - expected), abs(swap - expected) <= 1e-12 and swap > 0.1))
    return out


RUNNERS = {
    "axioms": suite_axioms,
    "identities": suite_identities,
    "extremals": suite_extremals,
    "geodesics": suite_geodesics,
    "separation": suite_separation,
    "invariance": suite_invariance,
}


def run(suite: str, seed: int) -> list[CheckResult]:
    names = SUITES if suite == "all" else (suite,)
    rows: list[CheckResult] = []
    for name in names:
        rows.extend(RUNNERS[name](seed))
    return sorted(rows, key=lambda r: r.case_id)
