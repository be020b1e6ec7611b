"""Random polyhedral asymmetric norms and the law suite L1..L14.

Every law is a theorem about asymmetric norms, so on correct code each one
holds on every generated space.  A failure carries the case configuration,
which regenerates the space exactly.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import random
import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .asymnorm import (
    AsymNorm,
    ball_decomposition,
    canonical_qp,
    equivalent,
    extreme_set,
    gauge,
    gauge_lp,
    qp_value,
    right_bounded,
    strongly_compact,
    symmetrize,
)
from .kernel import add, dot, fmt_rat, neg, scale, sub
from .polyhedra import VPoly, caratheodory_witness, dd_convert, minkowski_sum, set_equal, subset_test

logger = logging.getLogger(__name__)

LAWS = tuple(f"L{i}" for i in range(1, 15))


def fv(v) -> str:
    return "(" + ", ".join(fmt_rat(c) for c in v) + ")"


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpaceGenConfig:
    dim: int = 2
    n_vertices: int = 5
    n_rays: int = 2
    coordinate_bound: int = 4
    seed: int = 0

    def __post_init__(self):
        if not 2 <= self.dim <= 4:
            raise ValueError("dim must be in [2, 4]")
        if not 3 <= self.n_vertices <= 8:
            raise ValueError("n_vertices must be in [3, 8]")
        if not 0 <= self.n_rays <= 3:
            raise ValueError("n_rays must be in [0, 3]")
        if self.coordinate_bound < 1:
            raise ValueError("coordinate_bound must be positive")

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def generators(cfg: SpaceGenConfig) -> tuple[list, list, list]:
    """``(vertices, cross, rays)`` for ``cfg``; a pure function of the config."""
    rng = random.Random(cfg.seed)
    d, B = cfg.dim, cfg.coordinate_bound
    verts = [tuple(Fraction(rng.randint(-B, B)) for _ in range(d)) for _ in range(cfg.n_vertices)]
    delta = Fraction(1, B)
    cross = []
    for i in range(d):
        e = tuple(delta if j == i else Fraction(0) for j in range(d))
        cross += [e, neg(e)]
    rays: list = []
    if cfg.n_rays:
        w = (0,) * d
        while not any(w):
            w = tuple(rng.randint(-2, 2) for _ in range(d))
        tries = 0
        while len(rays) < cfg.n_rays:
            tries += 1
            if tries > 10_000:
                raise GenerationError(f"seed {cfg.seed}: could not draw rays")
            r = tuple(Fraction(rng.randint(-B, B)) for _ in range(d))
            if dot(w, r) > 0 and not any(_parallel(r, s) for s in rays):
                rays.append(r)
    return verts, cross, rays


def _parallel(r, s) -> bool:
    k = next(i for i, v in enumerate(s) if v)
    c = r[k] / s[k]
    return c > 0 and all(a == c * b for a, b in zip(r, s))


def random_space(cfg: SpaceGenConfig) -> AsymNorm:
    """``conv(V and the +-delta e_i cross) + cone(R)`` with ``R`` in an open halfspace."""
    verts, cross, rays = generators(cfg)
    try:
        return AsymNorm(VPoly(cfg.dim, tuple(verts + cross), tuple(rays)))
    except ValueError as exc:
        raise GenerationError(f"seed {cfg.seed}: {exc}") from exc


def case_config(cfg: SpaceGenConfig, index: int) -> SpaceGenConfig:
    """Configuration of the ``index``-th case: its own seed, vertex and ray counts."""
    seed = cfg.seed * 1_000_003 + index
    rng = random.Random(seed)
    return dataclasses.replace(
        cfg,
        seed=seed,
        n_vertices=rng.randint(3, cfg.n_vertices),
        n_rays=rng.randint(0, cfg.n_rays),
    )


def rand_rat(rng: random.Random, lo: int = -10, hi: int = 10) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 6))


def rand_point(rng: random.Random, d: int) -> tuple:
    return tuple(rand_rat(rng) for _ in range(d))


class Case:
    """Lazily computed objects shared by the laws of one generated space."""

    def __init__(self, cfg: SpaceGenConfig, mutate: str | None = None):
        self.cfg = cfg
        self.mutate = mutate

    def rng(self, law: str) -> random.Random:
        return random.Random(f"{self.cfg.seed}:{law}")

    @functools.cached_property
    def raw(self):
        return generators(self.cfg)

    @functools.cached_property
    def norm(self) -> AsymNorm:
        return random_space(self.cfg)

    @functools.cached_property
    def qp(self) -> AsymNorm:
        return canonical_qp(self.norm)

    @functools.cached_property
    def cert(self):
        return right_bounded(self.norm)

    @functools.cached_property
    def sibling(self) -> AsymNorm:
        """Same rays, perturbed vertices: equivalent by construction of theta."""
        verts, cross, rays = self.raw
        rng = self.rng("sibling")
        moved = [tuple(c + rng.randint(-2, 2) for c in v) for v in verts]
        return AsymNorm(VPoly(self.cfg.dim, tuple(moved + cross), tuple(rays)))

    @functools.cached_property
    def stranger(self) -> AsymNorm:
        other = dataclasses.replace(self.cfg, seed=self.cfg.seed + 7_919)
        return random_space(other)


# ---------------------------------------------------------------------------
# Laws: each returns a list of witness strings (empty when the law holds)
# ---------------------------------------------------------------------------


def law_axioms(c: Case) -> list[str]:
    n, rng, d = c.norm, c.rng("L1"), c.cfg.dim
    out = []
    for _ in range(10):
        x, y = rand_point(rng, d), rand_point(rng, d)
        a = abs(rand_rat(rng))
        if gauge(n, scale(a, x)) != a * gauge(n, x):
            out.append(f"homogeneity fails at a={a}, x={fv(x)}")
        if gauge(n, add(x, y)) > gauge(n, x) + gauge(n, y):
            out.append(f"subadditivity fails at x={fv(x)}, y={fv(y)}")
        if any(x) and gauge(n, x) == 0 and gauge(n, neg(x)) == 0:
            out.append(f"q(x) = q(-x) = 0 at x={fv(x)}")
    for g in n.theta.rays:
        if gauge(n, g) != 0 or gauge(n, neg(g)) <= 0:
            out.append(f"theta generator {fv(g)} misbehaves")
    for _ in range(3):
        x = rand_point(rng, d)
        if gauge_lp(n, x) != gauge(n, x):
            out.append(f"facet and LP gauges differ at {fv(x)}")
    return out


def law_theta_absorption(c: Case) -> list[str]:
    n, rng, d = c.norm, c.rng("L2"), c.cfg.dim
    out = []
    for z in n.theta.rays:
        for _ in range(5):
            x = rand_point(rng, d)
            zz = scale(abs(rand_rat(rng)), z)
            if gauge(n, add(x, zz)) > gauge(n, x):
                out.append(f"q(x + z) > q(x) at x={fv(x)}, z={fv(zz)}")
    return out


def law_sandwich(c: Case) -> list[str]:
    n = c.norm
    sym = n.sym_vrep.scaled(2) if c.mutate == "L3" else n.sym_vrep
    inner = minkowski_sum(sym, n.theta)
    cont = subset_test(inner, n.hrep)
    out = []
    if not cont:
        a, beta = cont.violated
        out.append(f"B^s + theta not within B: generator {fv(cont.witness)} violates {fv(a)} . x <= {fmt_rat(beta)}")
        return out
    equal = bool(subset_test(n.vrep, dd_convert(inner)))
    if equal != c.cert.one_bounded:
        out.append(f"ball equality {equal} but one_bounded {c.cert.one_bounded}")
    return out


def law_thetas_equal(c: Case) -> list[str]:
    n = c.norm
    out = []
    for label, m in (("q_p", c.qp), ("3q", n.scaled(3)), ("stranger", c.stranger)):
        cert = equivalent(n, m)
        if cert:
            if not n.theta.set_equal(m.theta):
                out.append(f"{label}: equivalent yet theta differs")
        else:
            dvec = cert.direction
            in_n, in_m = n.theta.contains(dvec), m.theta.contains(dvec)
            if in_n == in_m:
                out.append(f"{label}: direction {fv(dvec)} not in exactly one cone")
            if label != "stranger":
                out.append(f"{label}: expected an equivalent pair")
    return out


def law_qp(c: Case) -> list[str]:
    n, qp, rng, d = c.norm, c.qp, c.rng("L5"), c.cfg.dim
    out = []
    for _ in range(20):
        x = rand_point(rng, d)
        v = qp_value(n, x)
        if gauge(n, x) > v:
            out.append(f"(p1) p(x) > q_p(x) at {fv(x)}")
        if v != gauge(qp, x):
            out.append(f"(p3) LP evaluator {v} != ball gauge {gauge(qp, x)} at {fv(x)}")
        if qp.sym_gauge(x) != n.sym_gauge(x):
            out.append(f"(p6) symmetrizations differ at {fv(x)}")
    if not subset_test(qp.vrep, n.hrep):
        out.append("(p2) B^{q_p} not within B")
    if not qp.theta.set_equal(n.theta):
        out.append("(p5) theta(q_p) != theta(p)")
    if not set_equal(symmetrize(qp).hrep, n.sym_ball):
        out.append("(p6) symmetric balls differ")
    if not right_bounded(qp).one_bounded:
        out.append("(p7) q_p not 1-bounded")
    if not set_equal(canonical_qp(qp).hrep, qp.hrep):
        out.append("(p7) q_p is not a fixed point of the construction")
    if set_equal(qp.hrep, n.hrep) != c.cert.one_bounded:
        out.append("(p8) ball equality disagrees with one_bounded")
    return out


def law_qp_equivalence(c: Case) -> list[str]:
    n, qp = c.norm, c.qp
    out = []
    cert = equivalent(n, qp)
    if not cert or not (cert.kappa > 0 and cert.lam > 0):
        out.append(f"p not equivalent to q_p: {cert}")
    if not strongly_compact(qp.vrep, n):
        out.append("ball of q_p not strongly compact")
    return out


def law_one_bounded_compact(c: Case) -> list[str]:
    out = []
    targets = [("q_p", c.qp)]
    if c.cert.one_bounded:
        targets.append(("p", c.norm))
    for label, m in targets:
        sc = strongly_compact(m.vrep, m)
        if not sc:
            out.append(f"{label}: 1-bounded ball not strongly compact, ray {sc.escaping_ray}")
            continue
        if not subset_test(m.sym_vrep, m.hrep) or not subset_test(m.vrep, m.qp_hrep):
            out.append(f"{label}: B^s within B within B^s + theta fails")
    return out


def law_geometry(c: Case) -> list[str]:
    out = []
    for label, m in (("p", c.norm), ("q_p", c.qp)):
        _, ok = ball_decomposition(m)
        if not ok:
            out.append(f"{label}: B != S(B) + theta")
    return out


def law_extreme_bounded(c: Case) -> list[str]:
    n = c.norm
    ext = extreme_set(n.vrep, n)
    if not ext:
        return ["no extreme points"]
    h = max(n.sym_gauge(e) for e in ext)
    r = c.cert.r_star
    if not r > 0:
        return [f"r_star = {r}"]
    if r < 1 / h:
        return [f"r_star {r} below 1/h = {1 / h}"]
    return []


def law_extreme_in_sym(c: Case) -> list[str]:
    out = []
    targets = [("q_p", c.qp)] + ([("p", c.norm)] if c.cert.one_bounded else [])
    for label, m in targets:
        for e in extreme_set(m.vrep, m):
            if m.sym_gauge(e) > 1:
                out.append(f"{label}: extreme point {fv(e)} outside B^s")
    return out


def law_theta_equality(c: Case) -> list[str]:
    n, m, rng, d = c.norm, c.sibling, c.rng("L11"), c.cfg.dim
    cert = equivalent(n, m)
    if not cert:
        return [f"same rays but not equivalent: direction {cert.direction}"]
    out = []
    for _ in range(10):
        x = rand_point(rng, d)
        q, p = gauge(n, x), gauge(m, x)
        if not (cert.kappa * q <= p <= cert.lam * q):
            out.append(f"constants violated at {fv(x)}")
    return out


def law_caratheodory(c: Case) -> list[str]:
    rng, d = c.rng("L12"), c.cfg.dim
    out = []
    for _ in range(3):
        k = rng.randint(d + 2, 2 * d + 3)
        pts = [rand_point(rng, d) for _ in range(k)]
        w = [Fraction(rng.randint(0, 5)) for _ in range(k)]
        if not any(w):
            w[0] = Fraction(1)
        s = sum(w)
        x = tuple(sum(wi * p[j] for wi, p in zip(w, pts)) / s for j in range(d))
        res = caratheodory_witness(pts, x)
        if not res:
            out.append(f"hull point {fv(x)} reported outside")
            continue
        if len(res.weights) > d + 1 or any(v < 0 for v in res.weights) or sum(res.weights) != 1:
            out.append(f"bad weights {res.weights}")
        back = tuple(sum(wi * p[j] for wi, p in zip(res.weights, res.points)) for j in range(d))
        if back != x:
            out.append(f"combination rebuilds {fv(back)}, not {fv(x)}")
        far = tuple(Fraction(100) for _ in range(d))
        sep = caratheodory_witness(pts, far)
        if sep:
            out.append("far point reported inside hull")
        else:
            a, beta = sep.separator
            if dot(a, far) <= beta or any(dot(a, p) > beta for p in pts):
                out.append(f"separator {sep.separator} invalid")
    return out


def law_scalar_continuity(c: Case) -> list[str]:
    n, rng, d = c.norm, c.rng("L13"), c.cfg.dim
    out = []
    for _ in range(10):
        x, y = rand_point(rng, d), rand_point(rng, d)
        lam, mu = abs(rand_rat(rng)), abs(rand_rat(rng))
        lhs = gauge(n, sub(scale(lam, y), scale(mu, x)))
        rhs = lam * gauge(n, sub(y, x)) + abs(lam - mu) * n.sym_gauge(x)
        if lhs > rhs:
            out.append(f"lam={lam}, mu={mu}, x={fv(x)}, y={fv(y)}: {lhs} > {rhs}")
    return out


def law_equivalent_right_bounded(c: Case) -> list[str]:
    out = []
    q, p = c.norm, c.sibling
    for a, b, label in ((q, p, "q->p"), (p, q, "p->q")):
        ra, rb = right_bounded(a).r_star, right_bounded(b).r_star
        if not (ra > 0 and rb > 0):
            out.append(f"{label}: nonpositive r_star")
            continue
        lam = 1 / max(gauge(a, v) for v in b.vrep.points)  # lam B_b within B_a
        kappa = max(b.sym_gauge(v) for v in a.sym_vrep.points)  # B_a^s within kappa B_b^s
        if rb < ra * lam / kappa:
            out.append(f"{label}: r_star {rb} below transferred bound {ra * lam / kappa}")
    return out


LAW_FUNCS: dict[str, Callable[[Case], list[str]]] = {
    "L1": law_axioms,
    "L2": law_theta_absorption,
    "L3": law_sandwich,
    "L4": law_thetas_equal,
    "L5": law_qp,
    "L6": law_qp_equivalence,
    "L7": law_one_bounded_compact,
    "L8": law_geometry,
    "L9": law_extreme_bounded,
    "L10": law_extreme_in_sym,
    "L11": law_theta_equality,
    "L12": law_caratheodory,
    "L13": law_scalar_continuity,
    "L14": law_equivalent_right_bounded,
}

LAW_TITLES = {
    "L1": "asymmetric norm axioms",
    "L2": "theta absorption",
    "L3": "B^s + theta within B, equality iff 1-bounded",
    "L4": "equivalent norms share theta",
    "L5": "canonical q_p properties",
    "L6": "p equivalent to q_p; q_p ball strongly compact",
    "L7": "1-bounded balls are strongly compact",
    "L8": "B = S(B) + theta",
    "L9": "bounded extreme set gives right boundedness",
    "L10": "1-bounded: extreme points inside B^s",
    "L11": "equal theta gives equivalence",
    "L12": "Caratheodory combinations",
    "L13": "scalar continuity inequality",
    "L14": "right boundedness transfers across equivalence",
}


@dataclass
class LawResult:
    law: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class LawReport:
    config: SpaceGenConfig
    results: dict = field(default_factory=dict)
    mutate: str | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "mutate": self.mutate,
            "passed": self.passed,
            "laws": {
                k: {
                    "title": LAW_TITLES[k],
                    "cases": r.cases,
                    "passed": r.passed,
                    "failures": sorted(r.failures, key=lambda f: f["config"]["seed"]),
                }
                for k, r in self.results.items()
            },
        }

    def to_text(self) -> str:
        lines = []
        for k, r in self.results.items():
            status = "PASS" if r.passed else f"FAIL ({len(r.failures)})"
            lines.append(f"{k:>4} {status:<10} {r.cases:>4} cases  {LAW_TITLES[k]}")
            for f in sorted(r.failures, key=lambda f: f["config"]["seed"])[:3]:
                lines.append(f"       seed {f['config']['seed']}: {f['witness']}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _run_case(args) -> list[tuple[str, dict | None]]:
    cfg, laws, mutate = args
    case = Case(cfg, mutate)
    results = []
    for law in laws:
        try:
            witnesses = LAW_FUNCS[law](case)
        except Exception as exc:  # a crash is a failure of that law
            logger.debug("law %s crashed on seed %s\n%s", law, cfg.seed, traceback.format_exc())
            witnesses = [f"error: {type(exc).__name__}: {exc}"]
        failure = None
        if witnesses:
            failure = {"config": cfg.to_json(), "witness": witnesses[0], "count": len(witnesses)}
        results.append((law, failure))
    return results


def run_laws(
    cfg: SpaceGenConfig,
    cases: int,
    laws: Iterable[str] | None = None,
    mutate: str | None = None,
    workers: int = 1,
) -> LawReport:
    """Evaluate the selected laws (default: all) on ``cases`` generated spaces.

    ``mutate="L3"`` doubles the symmetric ball before the sandwich check, which
    must make L3 fail; it exists to show the harness catches violations.
    """
    if cases < 1:
        raise ValueError("cases must be at least 1")
    laws = list(laws) if laws is not None else list(LAWS)
    unknown = [l for l in laws if l not in LAW_FUNCS]
    if unknown:
        raise ValueError(f"unknown laws: {unknown}")
    report = LawReport(cfg, {l: LawResult(l) for l in laws}, mutate)
    jobs = [(case_config(cfg, i), laws, mutate) for i in range(cases)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_run_case, jobs))
    else:
        outcomes = [_run_case(j) for j in jobs]
    for outcome in outcomes:
        for law, failure in outcome:
            r = report.results[law]
            r.cases += 1
            if failure is not None:
                r.failures.append(failure)
    return report
