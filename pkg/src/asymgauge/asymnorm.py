"""Polyhedral asymmetric norms and the decisions built on them.

An :class:`AsymNorm` is determined by its closed unit ball, a rational
polyhedron with 0 in its interior and a pointed recession cone.  The zero cone
(``theta``), the symmetrized ball ``B & -B`` and the ball of the canonical
1-bounded norm ``B^s + theta`` are computed once, at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .kernel import (
    DimensionError,
    LPProblem,
    RVector,
    Sense,
    Status,
    dot,
    fmt_rat,
    lp_solve,
    rat,
    vec,
)
from .polyhedra import (
    Containment,
    HPoly,
    NotPointedError,
    PCone,
    Polyhedron,
    ValidationReport,
    VPoly,
    dd_convert,
    intersect,
    irredundant_vrep,
    minkowski_sum,
    subset_test,
    to_hpoly,
    validate_unit_ball,
)


class InvalidBallError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("not a unit ball: " + "; ".join(report.failures()))
        self.report = report


def gauge_h(h: HPoly, x: Sequence) -> Fraction:
    """Minkowski functional of ``{A x <= b}`` with every ``b_i > 0``."""
    best = Fraction(0)
    for a, bi in h.rows:
        v = dot(a, x)
        if v > 0:
            t = v / bi
            if t > best:
                best = t
    return best


class AsymNorm:
    """Asymmetric norm whose closed unit ball is a given polyhedron."""

    def __init__(self, ball: Polyhedron):
        report = validate_unit_ball(ball)
        if not report.ok:
            raise InvalidBallError(report)
        h = to_hpoly(ball)
        v = dd_convert(h)
        self.dim: int = h.dim
        self.hrep: HPoly = dd_convert(v)  # facet description, no redundant rows
        self.vrep: VPoly = v
        self.theta: PCone = PCone(self.dim, v.rays, self.hrep.A)
        self.sym_ball: HPoly = intersect(self.hrep, self.hrep.negated())
        self.sym_vrep: VPoly = dd_convert(self.sym_ball)
        self.qp_vrep: VPoly = minkowski_sum(self.sym_vrep, self.theta)
        self.qp_hrep: HPoly = dd_convert(self.qp_vrep)

    def __repr__(self) -> str:
        return f"AsymNorm(dim={self.dim}, vertices={len(self.vrep.points)}, rays={len(self.vrep.rays)})"

    def __call__(self, x: Sequence) -> Fraction:
        return gauge(self, x)

    def scaled(self, c) -> "AsymNorm":
        """The norm ``c * q`` (ball shrunk by ``1/c``)."""
        return AsymNorm(self.vrep.scaled(1 / rat(c)))

    def sym_gauge(self, x: Sequence) -> Fraction:
        return gauge_h(self.sym_ball, x)

    def to_json(self) -> dict:
        from .serialize import poly_to_json

        return {"dim": self.dim, "ball": poly_to_json(self.hrep)}


def _check_dim(n: AsymNorm, x: Sequence) -> RVector:
    x = vec(x)
    if len(x) != n.dim:
        raise DimensionError(f"point has length {len(x)}, expected {n.dim}")
    return x


def gauge(n: AsymNorm, x: Sequence) -> Fraction:
    """``inf {t >= 0 : x in t B}``, evaluated from the facets of ``B``."""
    return gauge_h(n.hrep, _check_dim(n, x))


def gauge_lp(n: AsymNorm, x: Sequence) -> Fraction:
    """The same value by linear programming over the generators.

    minimize ``sum l`` subject to ``x = sum l_i v_i + sum m_j r_j``, ``l, m >= 0``.
    """
    x = _check_dim(n, x)
    pts, rays = n.vrep.points, n.vrep.rays
    k = len(pts) + len(rays)
    A = [[g[i] for g in pts + rays] for i in range(n.dim)]
    c = [Fraction(1)] * len(pts) + [Fraction(0)] * len(rays)
    res = lp_solve(LPProblem(c, A, [Sense.EQ] * n.dim, x, (Fraction(0),) * k))
    if res.status is not Status.OPTIMAL:
        raise ArithmeticError(f"gauge LP ended {res.status.value} at {x}")
    return res.optimum


def closed_ball(n: AsymNorm, x: Sequence, r) -> HPoly:
    """``{y : q(y - x) <= r} = r B + x`` for ``r > 0``."""
    return n.hrep.scaled(rat(r)).translated(_check_dim(n, x))


def theta(n: AsymNorm) -> PCone:
    return n.theta


def symmetrize(n: AsymNorm) -> AsymNorm:
    return AsymNorm(n.sym_ball)


def canonical_qp(n: AsymNorm) -> AsymNorm:
    """The 1-bounded norm whose ball is ``B^s + theta``."""
    return AsymNorm(n.qp_vrep)


def qp_value(n: AsymNorm, x: Sequence) -> Fraction:
    """``min {q^s(x - y) : y in theta}`` by LP, independent of the ball ``B^s + theta``.

    Variables are the cone weights ``m`` (``y = sum m_j r_j``) and ``t``; each
    facet ``(a, b)`` of the symmetric ball gives ``a . (x - y) <= t b``.
    """
    x = _check_dim(n, x)
    rays = n.theta.rays
    k = len(rays)
    A, b = [], []
    for a, bi in n.sym_ball.rows:
        A.append([-dot(a, r) for r in rays] + [-bi])
        b.append(-dot(a, x))
    c = [Fraction(0)] * k + [Fraction(1)]
    res = lp_solve(LPProblem(c, A, [Sense.LE] * len(A), b, (Fraction(0),) * (k + 1)))
    if res.status is not Status.OPTIMAL:
        raise ArithmeticError(f"q_p LP ended {res.status.value} at {x}")
    return res.optimum


@dataclass(frozen=True)
class BoundednessCert:
    """Optimal right-boundedness constant and its evidence.

    ``vertex_gauges`` lists every vertex ``v`` of the ball with the gauge of
    ``M = B^s + theta`` at ``v``; ``r_star = 1 / max``.  ``witness`` is a
    maximizing vertex: for any ``r > r_star``, ``r * witness`` leaves ``M``.
    """

    r_star: Fraction
    one_bounded: bool
    witness: RVector
    vertex_gauges: tuple = field(repr=False, default=())
    containment: Containment | None = field(repr=False, default=None)

    def to_json(self) -> dict:
        return {
            "r_star": fmt_rat(self.r_star),
            "one_bounded": self.one_bounded,
            "witness": [fmt_rat(v) for v in self.witness],
        }


def right_bounded(n: AsymNorm) -> BoundednessCert:
    M = n.qp_hrep
    gauges = tuple((v, gauge_h(M, v)) for v in n.vrep.points)
    witness, top = max(gauges, key=lambda t: t[1])
    r = 1 / top
    # the rays of B lie in theta = rec(M), so the vertices decide
    cont = subset_test(n.vrep.scaled(r), M)
    if not cont:
        raise AssertionError("computed r_star fails its own containment")
    return BoundednessCert(r, r >= 1, witness, gauges, cont)


@dataclass(frozen=True)
class EquivCert:
    """``kappa * q <= p <= lam * q`` with ``q`` the first norm.

    When the zero cones differ, ``equivalent`` is False and ``direction`` is a
    generator lying in exactly one of them.
    """

    equivalent: bool
    kappa: Fraction | None = None
    lam: Fraction | None = None
    direction: RVector | None = None
    direction_in_first: bool | None = None

    def __bool__(self) -> bool:
        return self.equivalent

    def to_json(self) -> dict:
        if self.equivalent:
            return {"equivalent": True, "kappa": fmt_rat(self.kappa), "lambda": fmt_rat(self.lam)}
        return {
            "equivalent": False,
            "direction": [fmt_rat(v) for v in self.direction],
            "direction_in": "first" if self.direction_in_first else "second",
        }


def equivalent(q: AsymNorm, p: AsymNorm) -> EquivCert:
    """Optimal constants with ``kappa q <= p <= lam q``, or a separating direction."""
    if q.dim != p.dim:
        raise DimensionError(f"dimensions {q.dim} and {p.dim} differ")
    for r in q.theta.rays:
        if not p.theta.contains(r):
            return EquivCert(False, direction=r, direction_in_first=True)
    for r in p.theta.rays:
        if not q.theta.contains(r):
            return EquivCert(False, direction=r, direction_in_first=False)
    lam = max(gauge(p, v) for v in q.vrep.points)
    kappa = 1 / max(gauge(q, w) for w in p.vrep.points)
    # p <= lam q  <=>  B_q within lam B_p ;  kappa q <= p  <=>  B_p within (1/kappa) B_q
    if not subset_test(q.vrep, p.hrep.scaled(lam)) or not subset_test(p.vrep, q.hrep.scaled(1 / kappa)):
        raise AssertionError("equivalence constants fail their ball containments")
    return EquivCert(True, kappa, lam)


@dataclass(frozen=True)
class CompactnessCert:
    """``S subset K subset S + theta`` with ``S = conv(points of K)``, or an escaping ray."""

    strongly_compact: bool
    core: VPoly | None = None
    escaping_ray: RVector | None = None

    def __bool__(self) -> bool:
        return self.strongly_compact


def strongly_compact(K: VPoly, n: AsymNorm) -> CompactnessCert:
    if K.dim != n.dim:
        raise DimensionError(f"dimensions {K.dim} and {n.dim} differ")
    for r in K.rays:
        if not n.theta.contains(r):
            return CompactnessCert(False, escaping_ray=r)
    core = VPoly(K.dim, K.points)
    if not subset_test(K, minkowski_sum(core, n.theta)):
        raise AssertionError("core plus theta does not cover the set")
    return CompactnessCert(True, core=core)


def ball_decomposition(n: AsymNorm) -> tuple[VPoly, bool]:
    """``S`` = hull of the extreme points of ``B``, and whether ``B = S + theta``."""
    ext = irredundant_vrep(n.vrep)
    S = VPoly(n.dim, ext.points)
    rebuilt = minkowski_sum(S, n.theta)
    ok = bool(subset_test(rebuilt, n.hrep)) and bool(subset_test(n.vrep, rebuilt))
    return S, ok


def extreme_set(K: VPoly, n: AsymNorm) -> list[RVector]:
    """Extreme points of ``K + theta``; empty when that sum contains a line."""
    try:
        return list(irredundant_vrep(minkowski_sum(K, n.theta)).points)
    except NotPointedError:
        return []


def analyze(n: AsymNorm) -> dict:
    """Full JSON-ready report on a norm."""
    from .serialize import poly_to_json

    cert = right_bounded(n)
    ext = extreme_set(n.vrep, n)
    sc = strongly_compact(n.vrep, n)
    qp = canonical_qp(n)
    return {
        "dim": n.dim,
        "ball": poly_to_json(n.hrep),
        "vertices": [[fmt_rat(c) for c in v] for v in n.vrep.points],
        "theta": [[fmt_rat(c) for c in r] for r in n.theta.rays],
        "sym_ball": poly_to_json(n.sym_vrep),
        "qp_ball": poly_to_json(qp.hrep),
        "r_star": fmt_rat(cert.r_star),
        "one_bounded": cert.one_bounded,
        "extreme_points": [[fmt_rat(c) for c in v] for v in ext],
        "strongly_compact": bool(sc),
        "equivalence_to_qp": equivalent(n, qp).to_json(),
    }


__all__ = [
    "AsymNorm",
    "BoundednessCert",
    "CompactnessCert",
    "EquivCert",
    "InvalidBallError",
    "analyze",
    "ball_decomposition",
    "canonical_qp",
    "closed_ball",
    "equivalent",
    "extreme_set",
    "gauge",
    "gauge_h",
    "gauge_lp",
    "qp_value",
    "right_bounded",
    "strongly_compact",
    "symmetrize",
    "theta",
]
