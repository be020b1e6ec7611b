import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asymgauge.asymnorm import AsymNorm
from asymgauge.serialize import SpecError, norm_from_json, parse_body, parse_rat, poly_from_json, poly_to_json
from asymgauge.polyhedra import HPoly, VPoly

from conftest import points

LATTICE_JSON = '{"dim":2,"kind":"hrep","A":[["1","0"],["0","1"]],"b":["1","1"]}'


def test_lattice_spec():
    spec = parse_body(LATTICE_JSON)
    assert spec.kind == "hrep" and spec.dim == 2
    assert spec.poly == HPoly(2, [[1, 0], [0, 1]], [1, 1])


def test_analytic_spec():
    spec = parse_body('{"kind":"analytic","name":"hyperbola"}')
    assert spec.kind == "analytic" and spec.dim == 2
    assert json.loads(spec.dumps()) == {"kind": "analytic", "name": "hyperbola", "dim": 2}


def test_division_by_zero_names_field():
    with pytest.raises(SpecError) as e:
        parse_body('{"dim":2,"kind":"hrep","A":[["1","0"]],"b":["1/0"]}')
    assert e.value.field == "b[0]"


@pytest.mark.parametrize(
    "text,field",
    [
        ('{"kind":"analytic","name":"torus"}', "name"),
        ('{"dim":2,"kind":"hrep","A":[["1","0","0"]],"b":["1"]}', "A[0]"),
        ('{"dim":2,"kind":"vrep","points":[["x","0"]]}', "points[0][0]"),
        ('{"dim":2,"kind":"blob"}', "kind"),
        ('{"dim":2,"kind":"hrep","A":[["0","0"]],"b":["1"]}', "A[0]"),
        ("[1, 2", "<json>"),
    ],
)
def test_diagnostics(text, field):
    with pytest.raises(SpecError) as e:
        parse_body(text)
    assert e.value.field == field


def test_parse_rat_rejects_floats():
    with pytest.raises(SpecError):
        parse_rat(0.5, "b[0]")
    assert parse_rat("1.25", "x") == Fraction(5, 4)


@given(st.lists(points(2), min_size=1, max_size=5), st.lists(points(2), max_size=2))
def test_vrep_round_trip(pts, rays):
    rays = [r for r in rays if any(r)]
    v = VPoly(2, pts, rays)
    assert poly_from_json(json.loads(json.dumps(poly_to_json(v)))) == v


def test_norm_file_round_trip():
    n = AsymNorm(HPoly(2, [[1, 0], [0, 1]], [1, 1]))
    m = norm_from_json(n.to_json())
    assert poly_to_json(m.hrep) == poly_to_json(n.hrep)
    with pytest.raises(SpecError):
        norm_from_json({"kind": "analytic", "name": "cylinder"})
