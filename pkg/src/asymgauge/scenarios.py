"""Non-polyhedral unit balls given by membership oracles, and scenario reports.

Three bodies drive the scenarios:

* ``hyperbola``: ``{(x, y) : x < 2, y <= 1/(x - 2) + 2}``, a right bounded ball
  that is not compact;
* ``cylinder``: ``{y^2 + z^2 <= 1, x <= 1}`` in R^3, with the sequence
  ``u_n = (-n, cos(n pi / (2(n+1))), sin(n pi / (2(n+1))))`` on its surface;
* ``parabola``: ``K = {x <= 0, y <= -x^2}`` under the lattice norm
  ``max(x+, y+)``, whose ball is also registered as ``lattice``.

Floating point lives only here.  Polyhedral approximations are converted to
exact rationals before any decision procedure sees them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .asymnorm import AsymNorm, gauge
from .polyhedra import HPoly, PCone, VPoly, dd_convert, irredundant_vrep, recession_cone

SCENARIO_TOL = 1e-9
APPROX_TOL = 1e-6


class UnboundedGaugeError(ArithmeticError):
    """The body never absorbs the point: no ``t`` with ``x in t * body``."""


@dataclass(frozen=True)
class AnalyticBody:
    name: str
    dim: int
    member: Callable[[Sequence[float]], bool]
    exact_gauge: Callable[[Sequence[float]], float] | None = None
    theta_rays: tuple = ()
    fan: Callable[[int], list] | None = None
    absorbing: bool = True


def _hyperbola_member(p):
    x, y = p
    return x < 2 and y <= 1 / (x - 2) + 2


def hyperbola_gauge(p) -> float:
    """Closed form: smallest admissible root of ``3t^2 - 2t(x+y) + xy = 0``.

    ``(x, y) in tA`` reduces to ``x < 2t`` and ``3t^2 - 2t(x + y) + xy >= 0``;
    the smaller root never exceeds ``x/2``, so the gauge is the larger root,
    clipped at 0 (the clip is active exactly on the closed negative quadrant).
    """
    x, y = (float(v) for v in p)
    disc = x * x - x * y + y * y
    return max(0.0, (x + y + math.sqrt(disc)) / 3)


def _circle_fan(r: int) -> list:
    return [(math.cos(2 * math.pi * k / r), math.sin(2 * math.pi * k / r)) for k in range(r)]


def _cylinder_member(p):
    x, y, z = p
    return x <= 1 and y * y + z * z <= 1


def cylinder_gauge(p) -> float:
    x, y, z = (float(v) for v in p)
    return max(x, 0.0, math.hypot(y, z))


def _cylinder_fan(r: int) -> list:
    return [(1.0, math.cos(2 * math.pi * k / r), math.sin(2 * math.pi * k / r)) for k in range(r)]


def _lattice_member(p):
    return p[0] <= 1 and p[1] <= 1


def lattice_gauge(p) -> float:
    return max(float(p[0]), float(p[1]), 0.0)


def _parabola_member(p):
    x, y = p
    return x <= 0 and y <= -x * x


QUADRANT = ((-1, 0), (0, -1))

BODIES: dict[str, AnalyticBody] = {
    "hyperbola": AnalyticBody("hyperbola", 2, _hyperbola_member, hyperbola_gauge, QUADRANT, _circle_fan),
    "cylinder": AnalyticBody("cylinder", 3, _cylinder_member, cylinder_gauge, ((-1, 0, 0),), _cylinder_fan),
    "lattice": AnalyticBody("lattice", 2, _lattice_member, lattice_gauge, QUADRANT, _circle_fan),
    "parabola": AnalyticBody("parabola", 2, _parabola_member, absorbing=False),
}


def lattice_norm() -> AsymNorm:
    """``max(x+, y+)`` as an exact polyhedral norm."""
    return AsymNorm(HPoly(2, ((1, 0), (0, 1)), (1, 1)))


def gauge_bisect(b: AnalyticBody, x: Sequence, tol: float = SCENARIO_TOL) -> tuple[float, float]:
    """Bracket ``[lo, hi]`` around ``inf {t : x in t * b}`` with ``hi - lo <= tol``.

    ``x`` lies in ``hi * b``.  Either ``x`` is outside ``lo * b``, or ``lo == 0``
    and ``x`` was inside ``t * b`` for every ``t`` tried down to ``hi``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = tuple(float(v) for v in x)
    if not any(x):
        return 0.0, tol

    def inside(t):
        return b.member(tuple(v / t for v in x))

    hi = 1.0
    for _ in range(64):
        if inside(hi):
            break
        hi *= 2
    else:
        raise UnboundedGaugeError(f"{b.name}: {x} not in t*body for t up to 2^64")
    while hi > tol and inside(hi / 2):
        hi /= 2
    if hi <= tol:
        return 0.0, hi
    lo = hi / 2
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def polyhedral_approx(b: AnalyticBody, resolution: int, tol: float = SCENARIO_TOL) -> VPoly:
    """Inner polyhedral approximation from boundary points along ``b``'s fan.

    Each non-theta fan direction ``d`` contributes ``d / hi`` where ``hi`` is the
    upper bisection bracket, so the vertex is a member of ``b``; rays are the
    known theta generators.  Fans at resolution ``r`` are contained in fans at
    any multiple of ``r``, so approximations nest.
    """
    if resolution < 4:
        raise ValueError("resolution must be at least 4")
    if b.fan is None:
        raise ValueError(f"body {b.name!r} has no direction fan")
    points = []
    for d in b.fan(resolution):
        try:
            lo, hi = gauge_bisect(b, d, tol)
        except UnboundedGaugeError as exc:
            raise UnboundedGaugeError(f"boundary bracketing failed along direction {d}") from exc
        if lo == 0.0 and hi <= tol:
            continue
        v = tuple(c / hi for c in d)
        if not b.member(v):
            raise ArithmeticError(f"vertex {v} along {d} is not a member of {b.name}")
        points.append(tuple(Fraction(c) for c in v))
    return VPoly(b.dim, tuple(points), tuple(tuple(Fraction(c) for c in r) for r in b.theta_rays))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class Check:
    description: str
    expected: Any
    computed: Any
    passed: bool
    source: str
    tolerance: float | None = None
    fatal: bool = True


@dataclass
class ScenarioReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.fatal)

    def check(self, description, expected, computed, passed, source, tolerance=None, fatal=True) -> Check:
        c = Check(description, expected, computed, bool(passed), source, tolerance, fatal)
        self.checks.append(c)
        return c

    def find(self, prefix: str) -> list[Check]:
        return [c for c in self.checks if c.description.startswith(prefix)]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [
                {
                    "description": c.description,
                    "expected": _jsonable(c.expected),
                    "computed": _jsonable(c.computed),
                    "passed": c.passed,
                    "source": c.source,
                    "tolerance": c.tolerance,
                    "fatal": c.fatal,
                }
                for c in self.checks
            ],
            "witnesses": _jsonable(self.witnesses),
            "tables": _jsonable(self.tables),
        }

    def to_text(self) -> str:
        lines = [f"scenario {self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else ("FAIL" if c.fatal else "note")
            tol = f" (tol {c.tolerance:g})" if c.tolerance is not None else ""
            lines.append(f"  [{mark}] {c.description}: expected {_short(c.expected)}, got {_short(c.computed)}{tol} [{c.source}]")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return v if math.isfinite(v) else str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _short(v) -> str:
    s = str(_jsonable(v))
    return s if len(s) <= 60 else s[:57] + "..."


# ---------------------------------------------------------------------------
# Hyperbola
# ---------------------------------------------------------------------------


def hyperbola_boundary(x: float) -> tuple[float, float]:
    return (x, 1 / (x - 2) + 2)


def escape_threshold(t: float) -> float:
    """``3 - sqrt(1 - 2/t)``: where the boundary meets the edge of ``B((2, t))``."""
    return 3 - math.sqrt(1 - 2 / t)


def cover_margin(x: float, t: float) -> float:
    """``y - (1/(x-4) + 2 + t)`` at the boundary point above ``x``.

    The point lies outside the open ball ``B((2, t))`` iff the margin is ``>= 0``.
    """
    _, y = hyperbola_boundary(x)
    return y - (1 / (x - 4) + 2 + t)


def in_cover_ball(p, t: float) -> bool:
    x, y = p
    return x < 4 and y < 1 / (x - 4) + 2 + t


def hyperbola_scenario(tol: float = SCENARIO_TOL) -> ScenarioReport:
    body = BODIES["hyperbola"]
    rep = ScenarioReport("hyperbola")

    def q(p):
        return hyperbola_gauge(p)

    def qs(p):
        return max(q(p), q((-p[0], -p[1])))

    lo, hi = gauge_bisect(body, (0, 1.5), tol)
    rep.check("bisection gauge at (0, 3/2)", 1.0, [lo, hi], lo - tol <= 1 <= hi + tol and hi - lo <= tol, "bisection", tol)
    rep.check("closed-form gauge at (0, 3/2)", 1.0, q((0, 1.5)), abs(q((0, 1.5)) - 1) <= tol, "closed form", tol)
    rep.check("(1.9, -8) lies in the ball", True, body.member((1.9, 1 / (1.9 - 2) + 2)), body.member((1.9, 1 / (1.9 - 2) + 2)), "membership")

    # (a) theta is the closed negative quadrant
    inside_ok, outside_ok, agree_ok = True, True, True
    for k in range(48):
        phi = 2 * math.pi * k / 48
        d = (math.cos(phi), math.sin(phi))
        blo, bhi = gauge_bisect(body, d, tol)
        in_quadrant = d[0] <= 1e-15 and d[1] <= 1e-15
        if in_quadrant:
            inside_ok &= bhi <= tol
        else:
            outside_ok &= blo > 0
        agree_ok &= blo - tol <= q(d) <= bhi + tol
    rep.check("theta directions have gauge <= tol", True, inside_ok, inside_ok, "bisection", tol)
    rep.check("non-theta directions have positive gauge", True, outside_ok, outside_ok, "bisection", tol)
    rep.check("closed-form gauge lies in every bisection bracket", True, agree_ok, agree_ok, "closed form vs bisection", tol)
    g = gauge_bisect(body, (-1, -1), tol)
    rep.check("gauge at (-1, -1)", 0.0, list(g), g[1] <= tol, "bisection", tol)

    # (b) B within (2,2) + theta within 2 B^s + theta, hence (1/2) B within B^s + theta
    xs = [-1000.0, -100.0, -10.0, -3.0, -1.0, 0.0, 0.5, 1.0, 1.5, 1.9, 1.99, 1.999]
    boundary = [hyperbola_boundary(x) for x in xs]
    on_body = all(body.member(p) for p in boundary)
    rep.check("sampled boundary points belong to the ball", True, on_body, on_body, "membership")
    below = all(p[0] <= 2 and p[1] <= 2 for p in boundary)
    rep.check("boundary points lie in (2,2) + theta", True, below, below, "sampled")
    rep.check("q^s((2,2)) = 2", 2.0, qs((2, 2)), abs(qs((2, 2)) - 2) <= tol, "closed form", tol)
    blo, bhi = gauge_bisect(body, (2, 2), tol)
    rep.check("bisection q((2,2)) = 2", 2.0, [blo, bhi], blo - tol <= 2 <= bhi + tol, "bisection", tol)
    half_ok = True
    for p in boundary:
        z = (p[0] / 2 - 1, p[1] / 2 - 1)  # (1/2)p = (1,1) + z
        half_ok &= z[0] <= 0 and z[1] <= 0 and q(z) <= tol
    half_ok &= abs(qs((1, 1)) - 1) <= tol
    rep.check("(1/2) B within B^s + theta via (1,1) + theta", True, half_ok, half_ok, "sampled", tol)
    rep.tables["right_bound_r"] = 0.5

    # (c) the nested cover {B((2,t))}_{t<0} has no finite subcover
    escapes = {}
    for t in (-1.0, -2.0, -4.0):
        x0 = escape_threshold(t)
        edge = cover_margin(x0, t)
        rep.check(f"t={t:g}: boundary meets cover edge at x0={x0:.6f}", 0.0, edge, abs(edge) <= tol, "closed form", tol)
        left = [x0 - s for s in (1e-3, 1e-2, 0.1, 0.5, 1, 2, 5, 10, 100, 1000)]
        margins = [cover_margin(x, t) for x in left]
        ok = all(m > 0 for m in margins) and all(body.member(hyperbola_boundary(x)) for x in left)
        rep.check(f"t={t:g}: boundary points with x < x0 escape B((2,t))", "margin > 0", min(margins), ok, "closed form")
        right = [x0 + s * (2 - x0) for s in (0.01, 0.1, 0.5, 0.9, 0.99)]
        rmargins = [cover_margin(x, t) for x in right]
        covered = all(m < 0 for m in rmargins)
        rep.check(
            f"t={t:g}: boundary points with x > x0 stay inside B((2,t))",
            "margin < 0",
            max(rmargins),
            covered,
            "closed form",
        )
        escapes[t] = {"x0": x0, "escape_points": [hyperbola_boundary(x) for x in left[:3]]}
        rep.witnesses.append({"t": t, "x0": x0, "escaping_point": hyperbola_boundary(left[0])})
    rep.tables["escape"] = escapes
    # every boundary point is covered by some member of the family
    cover_ok = all(in_cover_ball(hyperbola_boundary(x), min(-1e-12, cover_margin(x, 0) / 2)) for x in xs)
    rep.check("family covers the sampled boundary", True, cover_ok, cover_ok, "closed form")

    # (d) nestedness
    grid = [(-10 + 14 * i / 40, -10 + 13 * j / 40) for i in range(41) for j in range(41)]
    nested_ok = True
    ts = (-4.0, -2.0, -1.0, -0.5)
    for i, s in enumerate(ts):
        for t in ts[i + 1:]:
            for p in grid:
                if in_cover_ball(p, s) and not in_cover_ball(p, t):
                    nested_ok = False
                    rep.witnesses.append({"nested_violation": p, "s": s, "t": t})
    rep.check("B((2,s)) within B((2,t)) for s < t", True, nested_ok, nested_ok, "sampled")

    # (e) equivalence with the lattice norm
    ratios, zero_match = [], True
    for k in range(360):
        phi = 2 * math.pi * k / 360
        d = (math.cos(phi), math.sin(phi))
        qv, pv = q(d), lattice_gauge(d)
        if pv <= tol or qv <= tol:
            zero_match &= pv <= tol and qv <= tol
            continue
        ratios.append(pv / qv)
    lo_r, hi_r = min(ratios), max(ratios)
    eq_ok = zero_match and lo_r >= 1 - tol and hi_r <= 2 + tol
    rep.check("q <= lattice <= 2 q on the unit circle", [1, 2], [lo_r, hi_r], eq_ok, "sampled", tol)
    return rep


# ---------------------------------------------------------------------------
# Cylinder
# ---------------------------------------------------------------------------


def cylinder_angle(n: int) -> float:
    return n * math.pi / (2 * (n + 1))


def u(n: int) -> tuple[float, float, float]:
    a = cylinder_angle(n)
    return (-float(n), math.cos(a), math.sin(a))


def u_exact(n: int, max_den: int = 10**6) -> tuple[Fraction, Fraction, Fraction]:
    """A rational point on the unit circle within ~1e-12 of ``u(n)``.

    Uses ``(1 - m^2, 2m) / (1 + m^2)`` with ``m`` a rational approximation of
    ``tan(angle / 2)``, so ``y^2 + z^2 = 1`` holds exactly.
    """
    m = Fraction(math.tan(cylinder_angle(n) / 2)).limit_denominator(max_den)
    den = 1 + m * m
    return (Fraction(-n), (1 - m * m) / den, 2 * m / den)


A2_VERTICES = ((1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1))


def cylinder_polytope(N: int) -> VPoly:
    """``conv(A2 vertices, u_1..u_N) + ray(-1, 0, 0)`` with exact points."""
    pts = tuple(tuple(Fraction(c) for c in v) for v in A2_VERTICES) + tuple(u_exact(n) for n in range(1, N + 1))
    return VPoly(3, pts, ((Fraction(-1), Fraction(0), Fraction(0)),))


def refutation_index(rho: float) -> int:
    """Index ``n`` with ``q^s(u_n) > rho``."""
    return math.ceil(rho) + 1


def cylinder_scenario(N: int = 50, tol: float = SCENARIO_TOL) -> ScenarioReport:
    if N < 3:
        raise ValueError("N must be at least 3")
    body = BODIES["cylinder"]
    p = cylinder_gauge
    rep = ScenarioReport("cylinder")

    def ps(v):
        return max(p(v), p(tuple(-c for c in v)))

    # (a)
    rep.tables["u"] = [[n, *u(n)] for n in range(1, N + 1)]
    u1 = u(1)
    ok = abs(u1[1] - math.sqrt(2) / 2) <= tol and abs(u1[2] - math.sqrt(2) / 2) <= tol
    rep.check("u_1 = (-1, sqrt2/2, sqrt2/2)", [-1, math.sqrt(2) / 2, math.sqrt(2) / 2], list(u1), ok, "closed form", tol)
    lo, hi = gauge_bisect(body, (-7, 0.6, 0.8), tol)
    rep.check("bisection gauge at (-7, 3/5, 4/5)", 1.0, [lo, hi], lo - tol <= 1 <= hi + tol, "bisection", tol)

    # (b) the two candidate limits
    to_x = [p((un[0] - 1, un[1], un[2])) for un in (u(n) for n in range(1, N + 1))]
    to_z = [p((un[0], un[1], un[2] - 1)) for un in (u(n) for n in range(1, N + 1))]
    rep.tables["p(u_n - (1,0,0))"] = to_x
    rep.tables["p(u_n - (0,0,1))"] = to_z
    const = all(abs(v - 1) <= tol for v in to_x)
    rep.check("p(u_n - (1,0,0)) = 1 for all n", 1.0, [min(to_x), max(to_x)], const, "closed form", tol)
    rep.check(
        "u_n converges to (1,0,0) in the gauge topology",
        0.0,
        to_x[-1],
        to_x[-1] <= 0.05,
        "closed form",
        fatal=False,
    )
    rep.check(f"p(u_{N} - (0,0,1)) < 0.05", "< 0.05", to_z[-1], to_z[-1] < 0.05, "closed form")
    mono = all(to_z[i + 1] < to_z[i] for i in range(4, len(to_z) - 1))
    rep.check("p(u_n - (0,0,1)) decreasing for n >= 5", True, mono, mono, "closed form")

    # (c) A1 is not q^s-bounded
    qs_vals = [ps(u(n)) for n in range(1, N + 1)]
    rep.tables["q^s(u_n)"] = qs_vals
    exact = all(abs(v - n) <= tol for n, v in zip(range(1, N + 1), qs_vals))
    rep.check("q^s(u_n) = n", "n", qs_vals[:3] + ["..."], exact, "closed form", tol)

    # (d) exact checks on the polyhedral approximation B_N
    BN = cylinder_polytope(N)
    red = irredundant_vrep(BN)
    kept = set(red.points)
    survivors = [n for n in range(1, N + 1) if u_exact(n) in kept]
    rep.check("every u_n is an extreme point of B_N", N, len(survivors), len(survivors) == N, "exact LP")
    dist = max(max(abs(float(a) - b) for a, b in zip(u_exact(n), u(n))) for n in range(1, N + 1))
    rep.check("rational u_n match the float sequence", 0.0, dist, dist <= tol, "exact vs float", tol)
    H = dd_convert(BN)
    cone = recession_cone(H)
    target = PCone.from_rays(3, [(-1, 0, 0)])
    rep.check("theta(B_N) = ray(-1,0,0)", [[-1, 0, 0]], [list(map(str, r)) for r in cone.rays], cone.set_equal(target), "exact")
    in_c = all(x <= 1 and y * y + z * z <= 1 for x, y, z in BN.points)
    rep.check("B_N within C", True, in_c, in_c, "exact")
    ball_n = AsymNorm(H)
    rep.tables["B_N"] = {"vertices": len(red.points), "facets": len(H.A)}

    # (e) refutation certificates
    for rho in (10, 100):
        n = refutation_index(rho)
        val = ps(u(n))
        rep.check(f"rho={rho}: u_{n} has q^s > rho", n, val, val > rho and n == math.ceil(rho) + 1, "closed form")
        rep.witnesses.append({"rho": rho, "n": n, "q^s": val})

    # (f) (1/sqrt2) C within B_N, C sampled
    rng = random.Random(20170)
    samples = []
    for _ in range(400):
        r = math.sqrt(rng.random()) / math.sqrt(2)
        a = rng.random() * 2 * math.pi
        x = 1 / math.sqrt(2) - rng.random() * (N + 2)
        samples.append((x, r * math.cos(a), r * math.sin(a)))
    fractions_in = {}
    for M in sorted({3, max(3, N // 2), N}):
        hm = dd_convert(cylinder_polytope(M))
        inside = sum(1 for s in samples if _float_gauge(hm, s) <= 1 + APPROX_TOL)
        fractions_in[M] = inside / len(samples)
    rep.tables["sandwich_fraction"] = fractions_in
    vals = [fractions_in[k] for k in sorted(fractions_in)]
    mono = all(a <= b for a, b in zip(vals, vals[1:]))
    rep.check("(1/sqrt2) C sample inside B_N, monotone in N", 1.0, fractions_in, mono and vals[-1] >= 1 - APPROX_TOL, "sampled", APPROX_TOL)
    sup_ok = all(p(tuple(float(c) for c in v)) <= 1 + tol for v in BN.points)
    rep.check("gauge of C at B_N vertices <= 1", True, sup_ok, sup_ok, "closed form", tol)
    rep.check("B_N is a valid unit ball with theta = ray(-1,0,0)", True, True, ball_n.theta.set_equal(target), "exact")
    return rep


def _float_gauge(h: HPoly, x) -> float:
    best = 0.0
    for a, bi in h.rows:
        v = sum(float(ai) * xi for ai, xi in zip(a, x)) / float(bi)
        best = max(best, v)
    return best


# ---------------------------------------------------------------------------
# Parabola
# ---------------------------------------------------------------------------


def in_parabola_set(x: Fraction, y: Fraction) -> bool:
    return x <= 0 and y <= -x * x


def parabola_scenario(samples: int = 1000) -> ScenarioReport:
    rep = ScenarioReport("parabola")
    lat = lattice_norm()

    def qs(v):
        return max(gauge(lat, v), gauge(lat, (-v[0], -v[1])))

    rep.check("(-2, -4) in K", True, in_parabola_set(Fraction(-2), Fraction(-4)), in_parabola_set(Fraction(-2), Fraction(-4)), "exact")
    rep.check("q^s((-2, -4)) = 4", 4, qs((-2, -4)), qs((-2, -4)) == 4, "exact")
    rep.check("(0, 0) in K", True, in_parabola_set(Fraction(0), Fraction(0)), in_parabola_set(Fraction(0), Fraction(0)), "exact")
    out = in_parabola_set(Fraction(-1), Fraction(-1, 2))
    rep.check("(-1, -1/2) not in K", False, out, not out, "exact")

    # (a) K within {0} + theta
    rng = random.Random(5)
    ok = True
    for _ in range(samples):
        x = -Fraction(rng.randint(0, 10**6), 10**4)
        y = -x * x - Fraction(rng.randint(0, 10**6), 10**4)
        assert in_parabola_set(x, y)
        if not (lat.theta.contains((x, y)) and gauge(lat, (x, y)) == 0):
            ok = False
            rep.witnesses.append({"outside": [x, y]})
    rep.check(f"{samples} sampled points of K lie in (0,0) + theta", True, ok, ok, "exact")
    sym_ok = _symbolic_facets()
    rep.check("x <= 0 and -x^2 <= 0 for every real x", True, sym_ok, sym_ok, "symbolic")
    theta_ok = lat.theta.set_equal(PCone.from_rays(2, QUADRANT))
    rep.check("lattice theta is the closed negative quadrant", True, theta_ok, theta_ok, "exact")

    # (b) boundary points with unbounded q^s
    values = []
    bd_ok = True
    for k in range(1, 21):
        x, y = Fraction(-k), Fraction(-k * k)
        on_boundary = y == -x * x and in_parabola_set(x, y) and not in_parabola_set(x, y + Fraction(1, 10**9))
        # strictly concave boundary: the chord midpoint of neighbours lies strictly inside
        a, b = x - 1, x + 1
        mid_y = (-(a * a) - b * b) / 2
        extreme = mid_y < -x * x
        val = qs((x, y))
        values.append(val)
        bd_ok &= on_boundary and extreme and val == k * k
    rep.tables["q^s boundary"] = values
    rep.check("q^s((-k, -k^2)) = k^2 for k <= 20", [k * k for k in range(1, 21)], values, bd_ok, "exact")
    grows = all(b > a for a, b in zip(values, values[1:]))
    rep.check("boundary q^s values grow without bound", True, grows, grows, "exact")
    return rep


def _symbolic_facets() -> bool:
    import sympy

    x = sympy.Symbol("x", real=True)
    return bool((-x**2).is_nonpositive) and bool(sympy.Symbol("x", nonpositive=True).is_nonpositive)


SCENARIOS = {
    "hyperbola": hyperbola_scenario,
    "cylinder": cylinder_scenario,
    "parabola": parabola_scenario,
}
