"""Exact polyhedral calculus over the rationals.

A polyhedron is either an :class:`HPoly` ``{x : A x <= b}`` or a
:class:`VPoly` ``conv(points) + cone(rays)``.  Conversion between the two goes
through the double description method on the homogenized cone, using integer
arithmetic with gcd normalization.  Empty and lower-dimensional sets are
ordinary values.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .kernel import (
    DimensionError,
    LPProblem,
    RVector,
    Sense,
    Status,
    dot,
    lp_solve,
    mat,
    neg,
    nullspace,
    rank,
    rat,
    scale,
    vec,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HPoly:
    """The set ``{x : A x <= b}``.  ``A`` with no rows is the whole space."""

    dim: int
    A: tuple = ()
    b: tuple = ()

    def __post_init__(self):
        A, b = mat(self.A), vec(self.b)
        if len(A) != len(b):
            raise DimensionError("A and b row counts differ")
        if any(len(r) != self.dim for r in A):
            raise DimensionError(f"rows of A must have length {self.dim}")
        if any(not any(r) for r in A):
            raise ValueError("zero rows are not allowed in an H-representation")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def rows(self):
        return zip(self.A, self.b)

    def contains(self, x: Sequence) -> bool:
        return all(dot(a, x) <= bi for a, bi in zip(self.A, self.b))

    def contains_direction(self, d: Sequence) -> bool:
        return all(dot(a, d) <= 0 for a in self.A)

    def scaled(self, c) -> "HPoly":
        c = rat(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return HPoly(self.dim, self.A, tuple(c * bi for bi in self.b))

    def negated(self) -> "HPoly":
        return HPoly(self.dim, tuple(neg(a) for a in self.A), self.b)

    def translated(self, t: Sequence) -> "HPoly":
        return HPoly(self.dim, self.A, tuple(bi + dot(a, t) for a, bi in self.rows))


@dataclass(frozen=True)
class VPoly:
    """``conv(points) + cone(rays)``; no points means the empty set."""

    dim: int
    points: tuple = ()
    rays: tuple = ()

    def __post_init__(self):
        pts, rs = mat(self.points), mat(self.rays)
        if any(len(p) != self.dim for p in pts) or any(len(r) != self.dim for r in rs):
            raise DimensionError(f"generators must have length {self.dim}")
        if any(not any(r) for r in rs):
            raise ValueError("rays must be nonzero")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "rays", rs)

    @property
    def is_empty(self) -> bool:
        return not self.points

    def scaled(self, c) -> "VPoly":
        c = rat(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return VPoly(self.dim, tuple(scale(c, p) for p in self.points), self.rays)

    def negated(self) -> "VPoly":
        return VPoly(self.dim, tuple(neg(p) for p in self.points), tuple(neg(r) for r in self.rays))

    def translated(self, t: Sequence) -> "VPoly":
        return VPoly(self.dim, tuple(tuple(a + b for a, b in zip(p, t)) for p in self.points), self.rays)


Polyhedron = Union[HPoly, VPoly]


@dataclass(frozen=True)
class PCone:
    """A polyhedral cone with apex 0, kept as generators and as ``{d : A d <= 0}``."""

    dim: int
    rays: tuple
    A: tuple

    @classmethod
    def from_rays(cls, dim: int, rays: Sequence) -> "PCone":
        rays = _sorted_unique(_primitive_frac(r) for r in mat(rays))
        h = dd_convert(VPoly(dim, (zero_vector(dim),), rays))
        return cls(dim, tuple(rays), h.A)

    @classmethod
    def from_hrep(cls, dim: int, A: Sequence) -> "PCone":
        A = mat(A)
        v = dd_convert(HPoly(dim, A, (Fraction(0),) * len(A)))
        return cls(dim, tuple(v.rays), A)

    @property
    def hpoly(self) -> HPoly:
        return HPoly(self.dim, self.A, (Fraction(0),) * len(self.A))

    @property
    def vpoly(self) -> VPoly:
        return VPoly(self.dim, (zero_vector(self.dim),), self.rays)

    def contains(self, d: Sequence) -> bool:
        return all(dot(a, d) <= 0 for a in self.A)

    def lineality(self) -> list[RVector]:
        return nullspace(self.A, self.dim)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality()

    @property
    def is_trivial(self) -> bool:
        return not self.rays

    def __le__(self, other: "PCone") -> bool:
        return all(other.contains(r) for r in self.rays)

    def set_equal(self, other: "PCone") -> bool:
        return self <= other and other <= self


def zero_vector(d: int) -> RVector:
    return (Fraction(0),) * d


# ---------------------------------------------------------------------------
# Double description
# ---------------------------------------------------------------------------


def _primitive_int(v: Sequence) -> tuple:
    """Clear denominators and divide by the gcd (direction preserved)."""
    den = 1
    for x in v:
        d = Fraction(x).denominator
        den = den // gcd(den, d) * d
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _reduce(v: list) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _primitive_frac(v: Sequence) -> RVector:
    return tuple(Fraction(x) for x in _primitive_int(v))


def _sorted_unique(vs) -> tuple:
    return tuple(sorted(set(tuple(v) for v in vs)))


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v) if a and b)


def dd_cone(rows: Sequence[Sequence], n: int) -> tuple[list[tuple], list[tuple]]:
    """Generators of ``{y in R^n : h . y >= 0 for every row h}``.

    Returns ``(rays, lineality)`` as primitive integer tuples.  Constraints are
    inserted in lexicographic order.  Lineality vectors are kept tight on every
    processed constraint, so the combinatorial adjacency test applies to the
    pointed quotient.
    """
    hs = sorted({_primitive_int(h) for h in rows if any(h)})
    lin = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays: list[tuple[tuple, int]] = []  # (vector, tight-set bitmask)
    seen = 0
    for k, h in enumerate(hs):
        bit = 1 << k
        idx = next((i for i, l in enumerate(lin) if _idot(h, l) != 0), None)
        if idx is not None:
            l = lin.pop(idx)
            hl = _idot(h, l)
            if hl < 0:
                l = tuple(-x for x in l)
                hl = -hl
            new_lin = []
            for li in lin:
                c = _idot(h, li)
                new_lin.append(_reduce([hl * a - c * b for a, b in zip(li, l)]) if c else li)
            lin = new_lin
            new_rays = []
            for r, z in rays:
                c = _idot(h, r)
                r2 = _reduce([hl * a - c * b for a, b in zip(r, l)]) if c else r
                new_rays.append((r2, z | bit))
            new_rays.append((l, seen))
            rays = new_rays
            seen |= bit
            continue

        pos, zer, negs = [], [], []
        for r, z in rays:
            v = _idot(h, r)
            if v > 0:
                pos.append((r, z, v))
            elif v < 0:
                negs.append((r, z, v))
            else:
                zer.append((r, z | bit))
        new_rays = [(r, z) for r, z, _ in pos] + zer
        if pos and negs:
            need = n - len(lin) - 2
            all_z = [z for _, z in rays]
            for rp, zp, vp in pos:
                for rq, zq, vq in negs:
                    common = zp & zq
                    if common.bit_count() < need:
                        continue
                    adjacent = True
                    for z in all_z:
                        if z != zp and z != zq and (z & common) == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    new = _reduce([vp * a - vq * b for a, b in zip(rq, rp)])
                    new_rays.append((new, common | bit))
        rays = new_rays
        seen |= bit
    return [r for r, _ in rays], lin


@functools.lru_cache(maxsize=8192)
def _h_to_v(h: HPoly) -> VPoly:
    d = h.dim
    rows = [(bi,) + tuple(-x for x in a) for a, bi in h.rows]
    rows.append((1,) + (0,) * d)
    rays, lin = dd_cone(rows, d + 1)
    points, out_rays = [], []
    for r in rays:
        if r[0] > 0:
            t = r[0]
            points.append(tuple(Fraction(x, t) for x in r[1:]))
        else:
            out_rays.append(tuple(Fraction(x) for x in r[1:]))
    for l in lin:
        # a line of the cone must have t = 0 because of the t >= 0 row
        v = tuple(Fraction(x) for x in l[1:])
        out_rays.append(v)
        out_rays.append(neg(v))
    if not points:
        return VPoly(d)
    out = VPoly(d, _sorted_unique(points), _sorted_unique(_primitive_frac(r) for r in out_rays))
    _check_conversion(h, out)
    return out


@functools.lru_cache(maxsize=8192)
def _v_to_h(v: VPoly) -> HPoly:
    d = v.dim
    if v.is_empty:
        e = tuple(Fraction(int(j == 0)) for j in range(d))
        return HPoly(d, (e, neg(e)), (Fraction(-1), Fraction(-1)))
    rows = [(1,) + tuple(p) for p in v.points] + [(0,) + tuple(r) for r in v.rays]
    gens, lin = dd_cone(rows, d + 1)
    out = set()
    for g in gens:
        beta, alpha = g[0], g[1:]
        if any(alpha):
            out.add(tuple(-x for x in alpha) + (beta,))
    for g in lin:
        beta, alpha = g[0], g[1:]
        out.add(tuple(-x for x in alpha) + (beta,))
        out.add(tuple(alpha) + (-beta,))
    out = sorted(out)
    h = HPoly(d, tuple(r[:-1] for r in out), tuple(r[-1] for r in out))
    _check_conversion(h, v)
    return h


def dd_convert(p: Polyhedron) -> Polyhedron:
    """The dual representation of ``p`` (H -> V or V -> H).

    An empty polyhedron converts to ``VPoly`` with no points, or to a pair of
    contradictory halfspaces.  Every conversion is checked (each point satisfies
    every halfspace, each ray every recession inequality); results are cached,
    so the check runs once per distinct input.  Full set equality is left to
    :func:`set_equal` and the round-trip tests.
    """
    if isinstance(p, HPoly):
        return _h_to_v(p)
    if isinstance(p, VPoly):
        return _v_to_h(p)
    raise TypeError(f"not a polyhedron: {p!r}")


class ConversionError(RuntimeError):
    pass


def _check_conversion(h: HPoly, v: VPoly) -> None:
    for x in v.points:
        if not h.contains(x):
            raise ConversionError(f"generator {x} violates the H-representation")
    for r in v.rays:
        if not h.contains_direction(r):
            raise ConversionError(f"ray {r} violates the H-representation")


def to_hpoly(p: Polyhedron) -> HPoly:
    return p if isinstance(p, HPoly) else dd_convert(p)


def to_vpoly(p: Polyhedron) -> VPoly:
    return p if isinstance(p, VPoly) else dd_convert(p)


def is_empty(p: Polyhedron) -> bool:
    return to_vpoly(p).is_empty


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def recession_cone(p: HPoly) -> PCone:
    """``{d : A d <= 0}`` for a nonempty ``p``."""
    if is_empty(p):
        raise ValueError("recession cone of an empty polyhedron is undefined")
    return PCone.from_hrep(p.dim, p.A)


def minkowski_sum(a: VPoly, c: PCone) -> VPoly:
    if a.dim != c.dim:
        raise DimensionError(f"dimensions {a.dim} and {c.dim} differ")
    rays = list(a.rays)
    for r in c.rays:
        if r not in rays:
            rays.append(r)
    return VPoly(a.dim, a.points, tuple(rays))


def intersect(a: HPoly, b: HPoly) -> HPoly:
    if a.dim != b.dim:
        raise DimensionError(f"dimensions {a.dim} and {b.dim} differ")
    return HPoly(a.dim, a.A + b.A, a.b + b.b)


def _combination_lp(v: VPoly, x: Sequence, *, ray_only: bool = False):
    """LP: x = sum l_i p_i + sum m_j r_j, sum l = 1 (unless ray_only), l, m >= 0."""
    d = v.dim
    gens = ([] if ray_only else list(v.points)) + list(v.rays)
    if not gens:
        return None
    n = len(gens)
    A = [[g[i] for g in gens] for i in range(d)]
    b = list(x)
    if not ray_only:
        A.append([Fraction(1)] * len(v.points) + [Fraction(0)] * len(v.rays))
        b.append(Fraction(1))
    return LPProblem((Fraction(0),) * n, A, [Sense.EQ] * len(A), b, (Fraction(0),) * n)


def combination(v: VPoly, x: Sequence):
    """Weights ``(point_weights, ray_weights)`` writing ``x`` in ``v``, or ``None``."""
    if v.is_empty:
        return None
    prob = _combination_lp(v, vec(x))
    res = lp_solve(prob)
    if res.status is not Status.OPTIMAL:
        return None
    k = len(v.points)
    return res.x[:k], res.x[k:]


def membership(p: Polyhedron, x: Sequence) -> bool:
    x = vec(x)
    if len(x) != p.dim:
        raise DimensionError(f"point has length {len(x)}, expected {p.dim}")
    if isinstance(p, HPoly):
        return p.contains(x)
    return combination(p, x) is not None


@dataclass(frozen=True)
class Containment:
    """Result of :func:`subset_test`.

    On success ``evidence`` holds, per generator of the left set, either the
    slack vector against each halfspace of the right set (H target) or the
    convex/conic weights expressing it (V target).  On failure ``witness`` is a
    generator of the left set outside the right one and ``violated`` a
    halfspace ``(a, b)`` of the right set it breaks.
    """

    holds: bool
    witness: RVector | None = None
    witness_is_ray: bool = False
    violated: tuple | None = None
    _evidence: object = field(default=(), repr=False, compare=False)

    def __bool__(self) -> bool:
        return self.holds

    @functools.cached_property
    def evidence(self) -> tuple:
        """Per-generator certificates; LP weights are computed on first access."""
        return self._evidence() if callable(self._evidence) else self._evidence


def subset_test(a: Polyhedron, b: Polyhedron) -> Containment:
    """Decide ``a`` subset of ``b`` exactly."""
    if a.dim != b.dim:
        raise DimensionError(f"dimensions {a.dim} and {b.dim} differ")
    va = to_vpoly(a)
    hb = to_hpoly(b)
    for x in va.points:
        for row, bi in hb.rows:
            if dot(row, x) > bi:
                return Containment(False, x, False, (row, bi))
    for r in va.rays:
        for row, bi in hb.rows:
            if dot(row, r) > 0:
                return Containment(False, r, True, (row, Fraction(0)))
    if isinstance(b, VPoly):

        def evidence():
            return tuple(_generator_certificate(b, g, False) for g in va.points) + tuple(
                _generator_certificate(b, g, True) for g in va.rays
            )

    else:
        evidence = tuple(tuple(bi - dot(row, x) for row, bi in hb.rows) for x in va.points) + tuple(
            tuple(-dot(row, r) for row, _ in hb.rows) for r in va.rays
        )
    return Containment(True, _evidence=evidence)


def _generator_certificate(b: VPoly, g, is_ray: bool):
    prob = _combination_lp(b, g, ray_only=is_ray)
    res = lp_solve(prob)
    return res.x


def set_equal(a: Polyhedron, b: Polyhedron) -> bool:
    return bool(subset_test(a, b)) and bool(subset_test(b, a))


class NotPointedError(ValueError):
    """The generated cone contains a line; ``lineality`` spans those lines."""

    def __init__(self, lineality: list[RVector]):
        super().__init__(f"cone of rays is not pointed; lineality {lineality}")
        self.lineality = lineality


def irredundant_vrep(v: VPoly) -> VPoly:
    """Extreme points and extreme ray directions of ``v``.

    A point is extreme when the facets tight at it have rank ``d``; a ray
    direction is extreme when the facets it lies on (``a . r = 0``) have rank
    ``d - 1``.  The facets come from the double description conversion.
    :func:`irredundant_vrep_lp` decides the same thing by linear programming.
    """
    if v.is_empty:
        raise ValueError("empty V-representation")
    d = v.dim
    rays = list(_sorted_unique(_primitive_frac(r) for r in v.rays))
    if rays:
        lin = PCone.from_rays(d, rays).lineality()
        if lin:
            raise NotPointedError(lin)
    h = to_hpoly(v)
    points = [p for p in _sorted_unique(v.points) if facet_rank_ok(h, p)]
    kept_rays = []
    for r in rays:
        tight = [a for a in h.A if dot(a, r) == 0]
        if (rank(tight) if tight else 0) == d - 1:
            kept_rays.append(r)
    return VPoly(d, tuple(points), tuple(kept_rays))


def irredundant_vrep_lp(v: VPoly) -> VPoly:
    """Drop generators that are convex/conic combinations of the others.

    Each generator is tested by an LP against the currently kept set, in
    order; what remains are the extreme points and extreme ray directions.
    """
    if v.is_empty:
        raise ValueError("empty V-representation")
    d = v.dim
    rays = list(_sorted_unique(_primitive_frac(r) for r in v.rays))
    if rays:
        cone = PCone.from_rays(d, rays)
        lin = cone.lineality()
        if lin:
            raise NotPointedError(lin)
    kept_rays = list(rays)
    for r in rays:
        others = [s for s in kept_rays if s != r]
        if others and combination_lp_feasible(VPoly(d, (), tuple(others)), r, ray_only=True):
            kept_rays.remove(r)
    points = list(_sorted_unique(v.points))
    kept = list(points)
    for p in points:
        others = [q for q in kept if q != p]
        if others and combination(VPoly(d, tuple(others), tuple(kept_rays)), p) is not None:
            kept.remove(p)
    return VPoly(d, tuple(kept), tuple(kept_rays))


def combination_lp_feasible(v: VPoly, x, *, ray_only: bool = False) -> bool:
    prob = _combination_lp(v, vec(x), ray_only=ray_only)
    return prob is not None and lp_solve(prob).status is Status.OPTIMAL


@dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    witness: RVector | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    absorbing: AxiomCheck
    convex: AxiomCheck
    pointed: AxiomCheck

    @property
    def ok(self) -> bool:
        return self.absorbing.ok and self.convex.ok and self.pointed.ok

    def failures(self) -> list[str]:
        out = []
        for name in ("absorbing", "convex", "pointed"):
            c = getattr(self, name)
            if not c.ok:
                out.append(f"{name}: {c.detail}")
        return out


def validate_unit_ball(p: Polyhedron) -> ValidationReport:
    """Check that ``p`` is the closed unit ball of an asymmetric norm.

    * absorbing: 0 lies in the interior, i.e. every halfspace has ``b > 0``;
      a failing row ``a`` is returned as a direction where the gauge is infinite;
    * convex: always true for polyhedra;
    * pointed: the recession cone ``{A d <= 0}`` contains no line.
    """
    h = to_hpoly(p)
    if is_empty(h):
        absorbing = AxiomCheck(False, None, "empty set")
    else:
        bad = next(((a, bi) for a, bi in h.rows if bi <= 0), None)
        if bad is None:
            absorbing = AxiomCheck(True)
        else:
            a, bi = bad
            absorbing = AxiomCheck(False, a, f"origin on or outside halfspace {list(map(str, a))} <= {bi}")
    lin = nullspace(h.A, h.dim)
    if lin:
        pointed = AxiomCheck(False, lin[0], "recession cone contains a line")
    else:
        pointed = AxiomCheck(True)
    return ValidationReport(absorbing, AxiomCheck(True), pointed)


@dataclass(frozen=True)
class CaratheodoryResult:
    """Either ``points``/``weights`` (a convex combination) or a separator.

    The separator ``(a, beta)`` satisfies ``a . p <= beta`` for every input
    point and ``a . x > beta``.
    """

    in_hull: bool
    points: tuple = ()
    weights: tuple = ()
    separator: tuple | None = None

    def __bool__(self) -> bool:
        return self.in_hull


def caratheodory_witness(points: Sequence[Sequence], x: Sequence) -> CaratheodoryResult:
    pts = mat(points)
    x = vec(x)
    if not pts:
        raise ValueError("need at least one point")
    d = len(x)
    if any(len(p) != d for p in pts):
        raise DimensionError("points and x have different lengths")

    w = combination(VPoly(d, pts), x)
    if w is None:
        return CaratheodoryResult(False, separator=_separator(pts, x))
    lam = list(w[0])
    support = [i for i, l in enumerate(lam) if l]
    # A basic solution already has at most d + 1 nonzeros; reduce anyway
    # in case the solver returned a degenerate non-basic point.
    while len(support) > d + 1:
        rows = [[pts[i][k] for i in support] for k in range(d)] + [[Fraction(1)] * len(support)]
        mu = nullspace(rows)[0]
        if all(m <= 0 for m in mu):
            mu = neg(mu)
        step = min(lam[i] / m for i, m in zip(support, mu) if m > 0)
        for i, m in zip(support, mu):
            lam[i] -= step * m
        support = [i for i in support if lam[i]]
    return CaratheodoryResult(True, tuple(pts[i] for i in support), tuple(lam[i] for i in support))


def _separator(pts, x):
    """Maximize ``a . x - beta`` over ``a`` in the unit box with ``a . p <= beta``."""
    d = len(x)
    # variables: a_1..a_d (free, boxed by rows), beta (free)
    A, senses, b = [], [], []
    for p in pts:
        A.append(list(p) + [Fraction(-1)])
        senses.append(Sense.LE)
        b.append(Fraction(0))
    for k in range(d):
        e = [Fraction(int(j == k)) for j in range(d)] + [Fraction(0)]
        A.append(e)
        senses.append(Sense.LE)
        b.append(Fraction(1))
        A.append([-v for v in e])
        senses.append(Sense.LE)
        b.append(Fraction(1))
    c = [-v for v in x] + [Fraction(1)]
    res = lp_solve(LPProblem(c, A, senses, b))
    sol = res.x
    return tuple(sol[:d]), sol[d]


def extreme_ray_directions(v: VPoly) -> tuple:
    return irredundant_vrep(v).rays


def facet_rank_ok(h: HPoly, x: Sequence) -> bool:
    """True when the halfspaces tight at ``x`` have full rank (x is a vertex)."""
    tight = [a for a, bi in h.rows if dot(a, x) == bi]
    return rank(tight) == h.dim if tight else False
