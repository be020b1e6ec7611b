"""Double description conversions, containment, extremality, Caratheodory."""

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from asymgauge.kernel import DimensionError, dot
from asymgauge.polyhedra import (
    HPoly,
    NotPointedError,
    PCone,
    VPoly,
    caratheodory_witness,
    combination,
    dd_convert,
    intersect,
    irredundant_vrep,
    irredundant_vrep_lp,
    is_empty,
    membership,
    minkowski_sum,
    recession_cone,
    set_equal,
    subset_test,
    validate_unit_ball,
)

from conftest import points

F = Fraction
SQUARE = HPoly(2, [[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])
LATTICE = HPoly(2, [[1, 0], [0, 1]], [1, 1])


def test_square_vertices():
    v = dd_convert(SQUARE)
    assert sorted(v.points) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert v.rays == ()


def test_lattice_ball_has_quadrant_recession():
    v = dd_convert(LATTICE)
    assert v.points == ((1, 1),)
    assert sorted(v.rays) == [(-1, 0), (0, -1)]
    rc = recession_cone(LATTICE)
    assert rc.contains((-3, -1)) and not rc.contains((1, 0))
    assert rc.is_pointed


def test_v_to_h_drops_interior_points():
    v = VPoly(2, [(1, 1), (-1, 1), (-1, -1), (1, -1), (0, 0), (F(1, 2), 0)])
    h = dd_convert(v)
    assert len(h.A) == 4
    assert set_equal(h, SQUARE)


def test_empty_hpoly():
    h = HPoly(1, [[1], [-1]], [-1, -1])
    assert is_empty(h)
    assert dd_convert(h).is_empty


def test_zero_row_rejected():
    with pytest.raises(ValueError):
        HPoly(2, [[0, 0]], [1])


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        VPoly(2, [(1, 2, 3)])
    with pytest.raises(DimensionError):
        subset_test(SQUARE, VPoly(3, [(0, 0, 0)]))


@given(st.lists(points(2), min_size=3, max_size=8))
def test_round_trip_polygon(pts):
    v = VPoly(2, pts)
    h = dd_convert(v)
    back = dd_convert(h)
    assert set_equal(v, h) and set_equal(back, v)
    for p in pts:
        assert h.contains(p)


@given(st.lists(points(3), min_size=4, max_size=8), st.lists(points(3), max_size=2))
def test_round_trip_with_rays(pts, rays):
    rays = [r for r in rays if any(r)]
    v = VPoly(3, pts, rays)
    h = dd_convert(v)
    assert set_equal(dd_convert(h), v)
    for r in rays:
        assert h.contains_direction(r)


@given(st.lists(points(3), min_size=4, max_size=9))
def test_irredundant_matches_lp(pts):
    v = VPoly(3, pts, [(-1, 0, 0)])
    a, b = irredundant_vrep(v), irredundant_vrep_lp(v)
    assert sorted(a.points) == sorted(b.points)
    assert sorted(a.rays) == sorted(b.rays)
    assert set_equal(a, v)


def test_irredundant_rejects_lines():
    with pytest.raises(NotPointedError):
        irredundant_vrep(VPoly(2, [(0, 0)], [(1, 0), (-1, 0)]))


def test_redundant_ray_removed():
    v = VPoly(2, [(0, 0)], [(1, 0), (0, 1), (1, 1), (2, 0)])
    assert sorted(irredundant_vrep(v).rays) == [(0, 1), (1, 0)]


def test_subset_witness_and_evidence():
    small = VPoly(2, [(0, 0), (1, 0), (0, 1)])
    c = subset_test(small, SQUARE)
    assert c and len(c.evidence) == 3
    assert all(s >= 0 for slack in c.evidence for s in slack)
    big = SQUARE.scaled(2)
    c = subset_test(big, SQUARE)
    assert not c
    a, beta = c.violated
    assert dot(a, c.witness) > beta


def test_subset_evidence_against_vrep_rebuilds_generators():
    target = dd_convert(SQUARE)
    inner = VPoly(2, [(F(1, 2), 0), (0, F(-1, 3))])
    c = subset_test(inner, target)
    assert c
    for g, w in zip(inner.points, c.evidence):
        k = len(target.points)
        lam, mu = w[:k], w[k:]
        rebuilt = tuple(
            sum(l * p[i] for l, p in zip(lam, target.points)) + sum(m * r[i] for m, r in zip(mu, target.rays))
            for i in range(2)
        )
        assert rebuilt == g and sum(lam) == 1 and all(x >= 0 for x in w)


def test_unbounded_not_in_bounded():
    c = subset_test(dd_convert(LATTICE), SQUARE.scaled(100))
    assert not c and c.witness_is_ray


def test_membership_and_combination():
    v = dd_convert(LATTICE)
    assert membership(v, (-5, 1))
    assert not membership(v, (2, 0))
    lam, mu = combination(v, (-5, 1))
    assert sum(lam) == 1


def test_minkowski_sum_and_intersect():
    cone = PCone.from_rays(2, [(-1, 0)])
    s = minkowski_sum(dd_convert(SQUARE), cone)
    assert membership(s, (-100, F(1, 2)))
    assert not membership(s, (2, 0))
    both = intersect(LATTICE, LATTICE.negated())
    assert set_equal(both, SQUARE)


def test_cone_representations_agree():
    c = PCone.from_rays(3, [(1, 0, 0), (0, 1, 0), (1, 1, 1)])
    d = PCone.from_hrep(3, c.A)
    assert c.set_equal(d)
    assert PCone.from_rays(3, [(1, 0, 0)]) <= c
    assert not c <= PCone.from_rays(3, [(1, 0, 0)])


def test_validate_unit_ball():
    assert validate_unit_ball(SQUARE).ok
    assert validate_unit_ball(LATTICE).ok
    off = SQUARE.translated((1, 0))  # origin on the boundary
    r = validate_unit_ball(off)
    assert not r.absorbing.ok and r.failures()
    strip = HPoly(2, [[0, 1], [0, -1]], [1, 1])
    r = validate_unit_ball(strip)
    assert not r.pointed.ok
    assert dot((0, 1), r.pointed.witness) == 0


def test_caratheodory_in_hull():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]
    res = caratheodory_witness(pts, (1, 1))
    assert res and len(res.points) <= 3 and sum(res.weights) == 1
    assert tuple(sum(w * p[i] for w, p in zip(res.weights, res.points)) for i in range(2)) == (1, 1)


def test_caratheodory_separator():
    pts = [(0, 0), (1, 0), (0, 1)]
    res = caratheodory_witness(pts, (1, 1))
    assert not res
    a, beta = res.separator
    assert dot(a, (1, 1)) > beta and all(dot(a, p) <= beta for p in pts)


@given(st.lists(points(3), min_size=5, max_size=9), st.data())
def test_caratheodory_bound(pts, data):
    w = data.draw(st.lists(st.integers(0, 4), min_size=len(pts), max_size=len(pts)))
    assume(any(w))
    s = sum(w)
    x = tuple(sum(F(wi, s) * p[i] for wi, p in zip(w, pts)) for i in range(3))
    res = caratheodory_witness(pts, x)
    assert res and len(res.points) <= 4
    assert all(v > 0 for v in res.weights) and sum(res.weights) == 1
