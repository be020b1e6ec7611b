"""JSON formats: rationals as strings, polyhedra, norms and body specs.

Polyhedron::

    {"dim": d, "kind": "hrep", "A": [["1", "0"], ...], "b": ["1", ...]}
    {"dim": d, "kind": "vrep", "points": [[...]], "rays": [[...]]}

Norm: ``{"dim": d, "ball": <polyhedron>}``.  A body spec is a polyhedron or
``{"kind": "analytic", "name": "hyperbola"}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .kernel import fmt_rat
from .polyhedra import HPoly, Polyhedron, VPoly

ANALYTIC_NAMES = ("hyperbola", "cylinder", "lattice", "parabola")


class SpecError(ValueError):
    """A body/norm payload is malformed; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def parse_rat(value: Any, field: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SpecError(field, f"expected a rational string, got {value!r}")
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(field, f"malformed rational {value!r} ({exc})") from None


def parse_vector(values: Any, field: str, dim: int | None = None) -> tuple:
    if not isinstance(values, list):
        raise SpecError(field, "expected a list")
    out = tuple(parse_rat(v, f"{field}[{i}]") for i, v in enumerate(values))
    if dim is not None and len(out) != dim:
        raise SpecError(field, f"expected length {dim}, got {len(out)}")
    return out


def parse_matrix(rows: Any, field: str, dim: int) -> tuple:
    if not isinstance(rows, list):
        raise SpecError(field, "expected a list of rows")
    return tuple(parse_vector(r, f"{field}[{i}]", dim) for i, r in enumerate(rows))


def rat_list(v) -> list[str]:
    return [fmt_rat(x) for x in v]


def poly_to_json(p: Polyhedron) -> dict:
    if isinstance(p, HPoly):
        return {"dim": p.dim, "kind": "hrep", "A": [rat_list(r) for r in p.A], "b": rat_list(p.b)}
    return {
        "dim": p.dim,
        "kind": "vrep",
        "points": [rat_list(x) for x in p.points],
        "rays": [rat_list(r) for r in p.rays],
    }


def _infer_dim(obj: dict) -> int:
    if "dim" in obj:
        d = obj["dim"]
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise SpecError("dim", f"expected a positive integer, got {d!r}")
        return d
    for key in ("A", "points", "rays"):
        rows = obj.get(key)
        if isinstance(rows, list) and rows and isinstance(rows[0], list):
            return len(rows[0])
    raise SpecError("dim", "missing and cannot be inferred")


def poly_from_json(obj: Any) -> Polyhedron:
    if not isinstance(obj, dict):
        raise SpecError("<root>", "expected an object")
    kind = obj.get("kind")
    dim = _infer_dim(obj)
    if kind == "hrep":
        A = parse_matrix(obj.get("A", []), "A", dim)
        b = parse_vector(obj.get("b", []), "b", len(A))
        for i, row in enumerate(A):
            if not any(row):
                raise SpecError(f"A[{i}]", "zero row")
        return HPoly(dim, A, b)
    if kind == "vrep":
        pts = parse_matrix(obj.get("points", []), "points", dim)
        rays = parse_matrix(obj.get("rays", []), "rays", dim)
        for i, r in enumerate(rays):
            if not any(r):
                raise SpecError(f"rays[{i}]", "zero ray")
        return VPoly(dim, pts, rays)
    raise SpecError("kind", f"expected 'hrep' or 'vrep', got {kind!r}")


@dataclass(frozen=True)
class BodySpec:
    dim: int | None
    kind: str  # "hrep" | "vrep" | "analytic"
    poly: Polyhedron | None = None
    name: str | None = None

    def to_json(self) -> dict:
        if self.kind == "analytic":
            out = {"kind": "analytic", "name": self.name}
            if self.dim is not None:
                out["dim"] = self.dim
            return out
        return poly_to_json(self.poly)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def parse_body(text: str | dict) -> BodySpec:
    """Parse a body specification from JSON text (or an already-decoded dict)."""
    if isinstance(text, str):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError("<json>", str(exc)) from None
    else:
        obj = text
    if not isinstance(obj, dict):
        raise SpecError("<root>", "expected an object")
    # a norm file wraps the ball
    if "ball" in obj and "kind" not in obj:
        inner = dict(obj["ball"]) if isinstance(obj["ball"], dict) else obj["ball"]
        if isinstance(inner, dict) and "dim" not in inner and "dim" in obj:
            inner["dim"] = obj["dim"]
        return parse_body(inner)
    kind = obj.get("kind")
    if kind == "analytic":
        name = obj.get("name")
        if name not in ANALYTIC_NAMES:
            raise SpecError("name", f"unknown analytic body {name!r}; expected one of {ANALYTIC_NAMES}")
        from .scenarios import BODIES

        dim = BODIES[name].dim
        if "dim" in obj and obj["dim"] != dim:
            raise SpecError("dim", f"body {name!r} lives in dimension {dim}")
        return BodySpec(dim, "analytic", name=name)
    poly = poly_from_json(obj)
    return BodySpec(poly.dim, kind, poly=poly)


def norm_from_json(obj: dict):
    from .asymnorm import AsymNorm

    spec = parse_body(obj)
    if spec.kind == "analytic":
        raise SpecError("kind", "an analytic body is not a polyhedral norm")
    return AsymNorm(spec.poly)
