"""Analytic bodies: closed forms against bisection, and the three scenarios."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asymgauge.asymnorm import AsymNorm, gauge
from asymgauge.scenarios import (
    BODIES,
    SCENARIO_TOL,
    UnboundedGaugeError,
    cover_margin,
    cylinder_gauge,
    cylinder_polytope,
    cylinder_scenario,
    escape_threshold,
    gauge_bisect,
    hyperbola_boundary,
    hyperbola_gauge,
    hyperbola_scenario,
    in_cover_ball,
    lattice_gauge,
    lattice_norm,
    parabola_scenario,
    polyhedral_approx,
    refutation_index,
    u,
    u_exact,
)

coord = st.floats(-20, 20, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("name,fn", [("hyperbola", hyperbola_gauge), ("cylinder", cylinder_gauge), ("lattice", lattice_gauge)])
def test_closed_forms_match_bisection(name, fn):
    body = BODIES[name]
    import random

    rng = random.Random(11)
    for _ in range(200):
        x = tuple(rng.uniform(-5, 5) for _ in range(body.dim))
        lo, hi = gauge_bisect(body, x)
        assert lo - 1e-9 <= fn(x) <= hi + 1e-9


@given(coord, coord)
def test_hyperbola_gauge_is_boundary_scale(x, y):
    g = hyperbola_gauge((x, y))
    body = BODIES["hyperbola"]
    if g > 1e-6:
        assert body.member((x / (g * (1 + 1e-9)), y / (g * (1 + 1e-9))))
        assert not body.member((x / (g * (1 - 1e-6)), y / (g * (1 - 1e-6))))


def test_lattice_gauge_agrees_with_exact_norm():
    n = lattice_norm()
    for p in [(3, -5), (-1, -1), (Fraction(1, 3), 2)]:
        assert lattice_gauge(p) == float(gauge(n, p))


def test_bisect_rejects_bad_tolerance_and_unabsorbed_points():
    with pytest.raises(ValueError):
        gauge_bisect(BODIES["lattice"], (1, 1), 0)
    with pytest.raises(UnboundedGaugeError):
        gauge_bisect(BODIES["parabola"], (1, 0))


def test_escape_side_by_direct_membership():
    """Independent of the margin formula: test boundary points against B((2,t))."""
    for t in (-1.0, -2.0, -4.0):
        x0 = escape_threshold(t)
        assert abs(cover_margin(x0, t)) < 1e-9
        for x in (x0 - 1, x0 - 0.01):
            assert not in_cover_ball(hyperbola_boundary(x), t)
        for x in (x0 + 0.01, (x0 + 2) / 2):
            assert in_cover_ball(hyperbola_boundary(x), t)


def test_hyperbola_scenario_passes():
    rep = hyperbola_scenario()
    assert rep.passed, rep.to_text()
    assert rep.find("(1/2) B within")[0].passed


def test_u_exact_lies_on_circle():
    for n in (1, 7, 50):
        x, y, z = u_exact(n)
        assert y * y + z * z == 1 and x == -n
        assert max(abs(float(a) - b) for a, b in zip(u_exact(n), u(n))) < 1e-9


def test_cylinder_probes():
    for n in range(1, 51):
        v = u(n)
        assert abs(max(cylinder_gauge(v), cylinder_gauge(tuple(-c for c in v))) - n) < SCENARIO_TOL
        assert abs(cylinder_gauge((v[0] - 1, v[1], v[2])) - 1) < SCENARIO_TOL
    assert cylinder_gauge((u(50)[0], u(50)[1], u(50)[2] - 1)) < 0.05
    assert refutation_index(10) == 11 and refutation_index(100) == 101


def test_cylinder_polytope_is_a_norm_ball():
    n = AsymNorm(cylinder_polytope(8))
    assert n.theta.rays == ((-1, 0, 0),)


def test_cylinder_scenario_passes():
    rep = cylinder_scenario()
    assert rep.passed, rep.to_text()


def test_parabola_scenario_passes():
    rep = parabola_scenario(samples=200)
    assert rep.passed, rep.to_text()
    assert rep.tables["q^s boundary"][19] == 400


def test_polyhedral_approx_is_inner_and_nested():
    body = BODIES["hyperbola"]
    coarse, fine = polyhedral_approx(body, 8), polyhedral_approx(body, 16)
    assert all(body.member(tuple(float(c) for c in p)) for p in fine.points)
    n = AsymNorm(fine)
    assert all(gauge(n, p) <= 1 for p in coarse.points)
    with pytest.raises(ValueError):
        polyhedral_approx(BODIES["parabola"], 8)


def test_report_serializes():
    rep = parabola_scenario(samples=10)
    data = rep.to_json()
    assert data["passed"] is True
    assert all({"description", "passed"} <= set(c) for c in data["checks"])
    assert math.isfinite(len(rep.to_text()))
