import cmath
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apollonian import sampling
from apollonian.domains import ConvexPolygon, UnitDisk, UpperHalfPlane, contains
from apollonian.errors import DegenerateInput, IneligibleDomain
from apollonian.geodesics import (
    aligned,
    argmax_set,
    common_witness,
    geodesic_arc_disk,
    polyline_json,
    polyline_svg,
    sample_arc,
    verify_geodesic,
)
from apollonian.geom import Circle, Line, cross_ratio, in_cyclic_order, invert_unit_circle
from apollonian.metrics import apollonian, apollonian_disk, extremal_points_disk, funk

from reference import log_ratio

D, H = UnitDisk(), UpperHalfPlane()
# a square standing on a corner; x, y on its vertical axis of symmetry
DIAMOND = ConvexPolygon((1, 1j, -1, -1j))
DIAMOND_S = (3 - math.sqrt(5)) / 4  # critical point of the edge ratio for x=0, y=0.5i
DIAMOND_VALUE = 0.8277854153395761  # exact segment maximization (reference.py)

disk_pt = st.builds(lambda r, t: r * cmath.exp(1j * t), st.floats(0, 0.95), st.floats(0, 2 * math.pi))


def test_aligned_example_disk():
    v = aligned(apollonian_disk, -0.5, 0, 0.5)
    assert v.lhs == pytest.approx(math.log(3), abs=1e-14)
    assert v.rhs == pytest.approx(math.log(1.5) + math.log(2), abs=1e-14)
    assert v.aligned and abs(v.defect) < 1e-14
    same = aligned(apollonian_disk, 0.2, 0.2, 0.2)
    assert same.aligned and same.defect == 0.0


def test_alignment_is_directional():
    rng = np.random.default_rng(7)
    checked = 0
    for _ in range(20):
        poly, x, y, z = _edge_arc_triple(rng)
        d = lambda u, v: apollonian(poly, u, v)  # noqa: E731
        if aligned(d, x, y, z).aligned:
            checked += 1
            assert not aligned(d, z, y, x).aligned
    assert checked > 5


def test_funk_segment_is_geodesic():
    d = lambda u, v: funk(D, u, v)  # noqa: E731
    assert aligned(d, -0.6 + 0.1j, 0.0 + 0.2j, 0.6 + 0.3j).aligned
    seg = [-0.7 + 0.2j + t * (1.3 - 0.5j) for t in np.linspace(0, 1, 12)]
    assert verify_geodesic(seg, d).max_defect <= 1e-9
    sq = ConvexPolygon((0, 1, 1 + 1j, 1j))
    seg = [0.1 + 0.2j + t * (0.7 + 0.5j) for t in np.linspace(0, 1, 10)]
    assert verify_geodesic(seg, lambda u, v: funk(sq, u, v)).max_defect <= 1e-9


def test_argmax_set_disk_single_cluster():
    m = argmax_set(D, 0.5, 0)
    assert len(m.points) == 1
    assert abs(m.points[0] + 1) < 1e-6
    assert m.value == pytest.approx(math.log(1.5), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(disk_pt, disk_pt)
def test_argmax_set_disk_is_a_plus(x, y):
    if abs(x - y) < 1e-3:
        return
    m = argmax_set(D, x, y)
    assert len(m.points) == 1
    assert abs(m.points[0] - extremal_points_disk(x, y)[0].point) < 1e-5


def test_argmax_set_diamond_has_two_symmetric_clusters():
    m = argmax_set(DIAMOND, 0, 0.5j)
    assert m.value == pytest.approx(DIAMOND_VALUE, abs=1e-12)
    assert len(m.points) == 2
    expect = {complex(DIAMOND_S, 1 - DIAMOND_S), complex(-DIAMOND_S, 1 - DIAMOND_S)}
    for p in m.points:
        assert min(abs(p - e) for e in expect) < 1e-6
        assert log_ratio(0, 0.5j, p) == pytest.approx(m.value, abs=1e-9)
    assert abs(m.points[0] + m.points[1].conjugate()) < 1e-6


def test_argmax_set_axis_aligned_square_single_peak():
    # the axis-aligned square gives one peak at the middle of the nearer edge
    sq = ConvexPolygon((-1 - 1j, 1 - 1j, 1 + 1j, -1 + 1j))
    m = argmax_set(sq, -0.5j, 0.5j)
    assert len(m.points) == 1 and abs(m.points[0] - 1j) < 1e-6


def test_argmax_set_halfplane():
    m = argmax_set(H, 2j, 1j)
    assert len(m.points) == 1 and abs(m.points[0]) < 1e-6
    assert argmax_set(H, 1j, 2j).points == []
    x, y = 1.106732457369192 + 0.7138567535617805j, 1.098656539694928 + 2.7245074553725757j
    far = argmax_set(H, x, y)
    assert len(far.points) == 1 and abs(far.points[0]) > 100


def test_argmax_set_errors():
    with pytest.raises(DegenerateInput):
        argmax_set(D, 0.1, 0.1)


def test_common_point_lemma_on_polygons():
    # whenever the three argmax sets share a point the triple is aligned
    rng = np.random.default_rng(2024)
    hits = 0
    for i in range(40):
        if i % 2:
            poly, x, y, z = _edge_arc_triple(rng)
        else:
            poly = sampling.convex_polygon(rng)
            x, y, z = sampling.polygon_points_inside(rng, poly, 3)
        sets = [argmax_set(poly, u, v).points for u, v in ((x, y), (y, z), (x, z))]
        shared = [a for a in sets[0]
                  if any(abs(a - b) < 1e-6 for b in sets[1]) and any(abs(a - c) < 1e-6 for c in sets[2])]
        if shared:
            hits += 1
            d = lambda u, v: apollonian(poly, u, v)  # noqa: E731
            assert abs(aligned(d, x, y, z).defect) <= 1e-8
    assert hits > 5


def test_common_witness_disk():
    a0 = common_witness(D, -0.5, 0, 0.5)
    assert a0 is not None and abs(a0 - 1) < 1e-6
    assert abs(abs(a0) - 1) < 1e-10
    assert common_witness(D, 0.5, 0, -0.3j) is None


def test_common_witness_needs_bounded():
    with pytest.raises(IneligibleDomain):
        common_witness(H, 1j, 2j, 3j)


def _edge_arc_triple(rng):
    """x inside a random polygon, then y, z on the circle through x meeting an edge at a right angle.

    Near the edge the domain looks like a half-plane, whose Apollonian
    geodesics are such circles; the triple is aligned unless another edge
    interferes.
    """
    while True:
        poly = sampling.convex_polygon(rng)
        verts = list(poly.vertices)
        (x,) = sampling.polygon_points_inside(rng, poly, 1)
        k = int(rng.integers(len(verts)))
        p, q = verts[k], verts[(k + 1) % len(verts)]
        rot = (q - p) / abs(q - p)
        xl = (x - p) / rot  # edge on the real axis, interior above
        a = abs(q - p) * rng.uniform(0.2, 0.8)
        c = (abs(xl) ** 2 - a * a) / (2 * (xl.real - a))
        r = abs(xl - c)
        t0, t1 = cmath.phase(xl - c), cmath.phase(a - c)
        y, z = (c + r * cmath.exp(1j * (t0 + f * (t1 - t0))) for f in (0.5, 0.8))
        y, z = y * rot + p, z * rot + p
        if contains(poly, y) and contains(poly, z):
            return poly, x, y, z


def test_common_witness_converse_on_polygons():
    rng = np.random.default_rng(99)
    found = 0
    for _ in range(20):
        poly, x, y, z = _edge_arc_triple(rng)
        d = lambda u, v: apollonian(poly, u, v)  # noqa: E731
        if not aligned(d, x, y, z).aligned:
            continue
        a0 = common_witness(poly, x, y, z)
        assert a0 is not None
        for u, v in ((x, y), (y, z), (x, z)):
            assert abs(log_ratio(u, v, a0) - d(u, v)) <= 1e-8
        found += 1
    assert found >= 10


def test_geodesic_arc_diameter():
    arc = geodesic_arc_disk(-0.5, 0.5)
    assert isinstance(arc.support, Line)
    assert abs(arc.support.direction - 1) < 1e-15
    assert abs(arc.exit - 1) < 1e-15
    pts = sample_arc(arc, 3)
    assert all(abs(p.imag) < 1e-15 for p in pts)
    assert pts[0].real < pts[1].real < pts[2].real


def test_geodesic_arc_through_origin():
    arc = geodesic_arc_disk(0.4 + 0.2j, 0)
    assert isinstance(arc.support, Line)
    assert arc.exit == pytest.approx(-(0.4 + 0.2j) / abs(0.4 + 0.2j))


def test_geodesic_arc_circle_case():
    arc = geodesic_arc_disk(0.3, 0.5j)
    assert isinstance(arc.support, Circle)
    c = arc.support
    assert abs(abs(c.center) ** 2 - c.radius**2 - 1) < 1e-10
    assert c.distance(0.3) < 1e-10 and c.distance(0.5j) < 1e-10
    assert c.distance(invert_unit_circle(0.5j)) < 1e-10
    assert abs(arc.exit - extremal_points_disk(0.3, 0.5j)[0].point) < 1e-8


def test_geodesic_arc_errors():
    with pytest.raises(DegenerateInput):
        geodesic_arc_disk(0.2, 0.2)
    with pytest.raises(DegenerateInput):
        sample_arc(geodesic_arc_disk(0, 0.5), 1)


@settings(max_examples=100, deadline=None)
@given(disk_pt, disk_pt)
def test_arc_is_geodesic(x, y):
    if abs(x - y) < 1e-3:
        return
    arc = geodesic_arc_disk(x, y)
    s = arc.support
    if isinstance(s, Circle):
        assert abs(abs(s.center) ** 2 - s.radius**2 - 1) <= 1e-10 * max(1, s.radius**2)
    else:
        assert s.is_orthogonal_to_unit_circle()
    assert abs(arc.exit - extremal_points_disk(x, y)[0].point) < 1e-8
    pts = sample_arc(arc, 8)
    assert all(abs(p) < 1 for p in pts)
    assert verify_geodesic(pts, apollonian_disk).max_defect <= 1e-9


@settings(max_examples=100, deadline=None)
@given(disk_pt, disk_pt)
def test_cross_ratio_of_ordered_arc_points(x, y):
    if abs(x - y) < 1e-2 or abs(y) < 1e-2:
        return
    arc = geodesic_arc_disk(x, y)
    pts = sample_arc(arc, 5)
    for z, w in itertools.combinations(pts, 2):
        if abs(w) < 1e-3:
            continue
        a = extremal_points_disk(z, w)[0].point
        b = invert_unit_circle(w)
        expect = 1 + abs(z - w) / abs(z * w.conjugate() - 1)
        assert abs(cross_ratio(z, w, a, b) - expect) < 1e-10 * max(1, expect)
        assert in_cyclic_order(z, w, a, b)


def test_verify_geodesic_subsamples_and_errors():
    arc = geodesic_arc_disk(0.1, 0.2 + 0.3j)
    pts = sample_arc(arc, 30)
    rep = verify_geodesic(pts, apollonian_disk, max_triples=1000, seed=1)
    assert rep.n_triples == 1000 and rep.passed
    assert verify_geodesic(pts, apollonian_disk, max_triples=1000, seed=1) == rep
    with pytest.raises(DegenerateInput):
        verify_geodesic(pts[:2], apollonian_disk)


def test_reversed_arc_lies_on_the_same_support():
    # the circle through w, z and 1/conj(z) is the forward support, so the
    # reversed samples are themselves a geodesic
    arc = geodesic_arc_disk(0.3, 0.5j)
    pts = sample_arc(arc, 8)
    back = geodesic_arc_disk(pts[-1], pts[-2])
    assert back.support.distance(0.3) < 1e-9
    rep = verify_geodesic(pts[::-1], apollonian_disk)
    assert rep.n_triples == 56 and rep.max_defect <= 1e-9


def test_polyline_exports():
    pts = sample_arc(geodesic_arc_disk(-0.5, 0.5), 3)
    text = polyline_json(pts, "unit_disk", "apollonian", 0.0)
    assert '"defect_max": 0.0' in text
    svg = polyline_svg(pts)
    assert svg.startswith("<svg") and svg.count("<path") == 1 and "<circle" in svg
