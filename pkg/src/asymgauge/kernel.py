"""Exact rational arithmetic helpers and a certified simplex solver.

Rationals are plain :class:`fractions.Fraction` values (always in lowest
terms, arbitrary precision); vectors are tuples of them.  The LP solver is a
dense two-phase tableau simplex with Bland's rule, so it always terminates and
returns bit-identical results for identical input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
RVector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    """Raised when vector/matrix shapes do not fit together."""


def rat(value) -> Fraction:
    """Coerce ints, Fractions, floats (exactly) and strings like '3/2' or '1.5'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def vec(values: Iterable) -> RVector:
    return tuple(rat(v) for v in values)


def mat(rows: Iterable[Iterable]) -> tuple:
    return tuple(vec(r) for r in rows)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add(u: Sequence, v: Sequence) -> RVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> RVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> RVector:
    return tuple(c * a for a in u)


def neg(u: Sequence) -> RVector:
    return tuple(-a for a in u)


def zeros(n: int) -> RVector:
    return (Fraction(0),) * n


def fmt_rat(q: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    return str(Fraction(q))


# ---------------------------------------------------------------------------
# Dense linear algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NoSolution:
    """An inconsistent system; ``row`` is the index of a row reducing to 0 = c != 0."""

    row: int

    def __bool__(self) -> bool:
        return False


def solve_linear(A: Sequence[Sequence], b: Sequence):
    """Solve ``A x = b`` exactly.

    Forward elimination is fraction-free (Bareiss) on an integer-scaled copy of
    the augmented matrix; back substitution is done in rationals.  For
    underdetermined consistent systems, free variables are set to zero.
    Returns a tuple of Fractions, or :class:`NoSolution`.
    """
    m = len(A)
    if len(b) != m:
        raise DimensionError(f"{m} rows but rhs of length {len(b)}")
    if m == 0:
        return ()
    n = len(A[0])
    if any(len(r) != n for r in A):
        raise DimensionError("ragged coefficient matrix")

    rows = [_integer_row(list(A[i]) + [b[i]]) for i in range(m)]
    origin = list(range(m))
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        origin[r], origin[p] = origin[p], origin[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            f = rows[i][c]
            rows[i] = [(piv * rows[i][k] - f * rows[r][k]) // prev for k in range(n + 1)]
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return NoSolution(origin[i])

    x = [Fraction(0)] * n
    for i in reversed(range(len(pivots))):
        c = pivots[i]
        acc = Fraction(rows[i][n])
        for k in range(c + 1, n):
            if rows[i][k]:
                acc -= rows[i][k] * x[k]
        x[c] = acc / rows[i][c]
    return tuple(x)


def _integer_row(row: Sequence) -> list[int]:
    den = 1
    for v in row:
        den = _lcm(den, Fraction(v).denominator)
    return [int(Fraction(v) * den) for v in row]


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


def rref(A: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[Fraction(v) for v in row] for row in A]
    if not M:
        return M, []
    m, n = len(M), len(M[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return M[:r], pivots


def rank(A: Sequence[Sequence]) -> int:
    return len(rref(A)[1]) if A else 0


def nullspace(A: Sequence[Sequence], n: int | None = None) -> list[RVector]:
    """Basis of ``{x : A x = 0}``.  ``n`` is required when ``A`` has no rows."""
    if not A:
        if n is None:
            raise DimensionError("column count unknown for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(A[0])
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Linear programming
# ---------------------------------------------------------------------------


class Sense(str, enum.Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class Status(str, enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LPProblem:
    """minimize ``objective . x`` subject to ``A[i] . x  (senses[i])  b[i]``.

    ``lower[j]`` is a lower bound for ``x[j]``, or ``None`` for a free variable.
    Omitting ``lower`` altogether leaves every variable free.
    """

    objective: RVector
    A: tuple
    senses: tuple
    b: RVector
    lower: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "objective", vec(self.objective))
        object.__setattr__(self, "A", mat(self.A))
        object.__setattr__(self, "b", vec(self.b))
        object.__setattr__(self, "senses", tuple(Sense(s) for s in self.senses))
        n = len(self.objective)
        if n < 1:
            raise DimensionError("LP needs at least one variable")
        if len(self.A) < 1:
            raise DimensionError("LP needs at least one constraint")
        if any(len(r) != n for r in self.A):
            raise DimensionError("constraint row length differs from objective length")
        if not (len(self.senses) == len(self.b) == len(self.A)):
            raise DimensionError("A, senses and b must have the same number of rows")
        if self.lower is not None:
            if len(self.lower) != n:
                raise DimensionError("lower bounds must have one entry per variable")
            object.__setattr__(
                self, "lower", tuple(None if v is None else rat(v) for v in self.lower)
            )

    @property
    def bounds(self) -> tuple:
        return self.lower if self.lower is not None else (None,) * len(self.objective)

    def normalized_rows(self):
        """Rows rewritten as ``a . x <= b`` (``>=`` rows negated), with their senses."""
        out = []
        for a, s, bi in zip(self.A, self.senses, self.b):
            if s is Sense.GE:
                out.append((neg(a), -bi, s))
            else:
                out.append((a, bi, s))
        return out


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`lp_solve`.

    The certificate is expressed against the rows read as ``a . x <= b``
    (``>=`` rows negated); its entries are nonnegative on inequality rows.

    * Optimal: dual multipliers ``y``; ``r = c + sum y_i a_i`` vanishes on free
      variables, is nonnegative on bounded ones, and
      ``-y . b + sum r_j l_j`` equals the optimum.
    * Infeasible: Farkas multipliers; ``g = sum y_i a_i`` vanishes on free
      variables, is nonnegative on bounded ones, and ``y . b - g . l < 0``.
    * Unbounded: a direction ``d`` of the feasible region with ``c . d < 0``.
    """

    status: Status
    optimum: Fraction | None
    x: RVector | None
    certificate: RVector

    def verify(self, problem: LPProblem) -> bool:
        return verify_certificate(problem, self)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "optimum": None if self.optimum is None else fmt_rat(self.optimum),
            "x": None if self.x is None else [fmt_rat(v) for v in self.x],
            "certificate": [fmt_rat(v) for v in self.certificate],
        }


def verify_certificate(p: LPProblem, res: LPResult) -> bool:
    """Re-check an :class:`LPResult` by pure rational arithmetic."""
    n = len(p.objective)
    lower = p.bounds
    rows = p.normalized_rows()
    y = res.certificate

    if res.status is Status.UNBOUNDED:
        d = y
        if len(d) != n or dot(p.objective, d) >= 0:
            return False
        for a, s, bi in zip(p.A, p.senses, p.b):
            v = dot(a, d)
            if (s is Sense.LE and v > 0) or (s is Sense.GE and v < 0) or (s is Sense.EQ and v != 0):
                return False
        return all(l is None or dj >= 0 for l, dj in zip(lower, d))

    if len(y) != len(rows):
        return False
    for (a, bi, s), yi in zip(rows, y):
        if s is not Sense.EQ and yi < 0:
            return False
    g = [sum((yi * a[j] for (a, _, _), yi in zip(rows, y) if yi), Fraction(0)) for j in range(n)]

    if res.status is Status.INFEASIBLE:
        for j in range(n):
            if lower[j] is None and g[j] != 0:
                return False
            if lower[j] is not None and g[j] < 0:
                return False
        rhs = sum((yi * bi for (_, bi, _), yi in zip(rows, y)), Fraction(0))
        rhs -= sum((g[j] * lower[j] for j in range(n) if lower[j] is not None), Fraction(0))
        return rhs < 0

    # optimal: primal feasibility, dual feasibility, equal objectives
    x = res.x
    if x is None or res.optimum is None:
        return False
    for a, bi, _ in rows:
        v = dot(a, x)
        if v > bi:
            return False
    for a, s, bi in zip(p.A, p.senses, p.b):
        if s is Sense.EQ and dot(a, x) != bi:
            return False
    if any(l is not None and xj < l for l, xj in zip(lower, x)):
        return False
    r = [p.objective[j] + g[j] for j in range(n)]
    for j in range(n):
        if lower[j] is None and r[j] != 0:
            return False
        if lower[j] is not None and r[j] < 0:
            return False
    dual = -sum((yi * bi for (_, bi, _), yi in zip(rows, y)), Fraction(0))
    dual += sum((r[j] * lower[j] for j in range(n) if lower[j] is not None), Fraction(0))
    return dual == res.optimum == dot(p.objective, x)


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.T = rows
        self.basis = basis

    def pivot(self, r: int, j: int) -> None:
        T = self.T
        pr = T[r]
        inv = 1 / pr[j]
        pr = [v * inv if v else v for v in pr]
        T[r] = pr
        nz = [k for k, v in enumerate(pr) if v]
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[j]
            if f:
                for k in nz:
                    row[k] -= f * pr[k]
        self.basis[r] = j

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        z = list(cost)
        for i, bi in enumerate(self.basis):
            cb = cost[bi]
            if cb:
                for k, v in enumerate(self.T[i][:-1]):
                    if v:
                        z[k] -= cb * v
        return z

    def run(self, cost: list[Fraction], barred: set[int]):
        """Bland's rule.  Returns ``None`` at optimality or an unbounded column."""
        ncol = len(cost)
        while True:
            z = self.reduced_costs(cost)
            j = next((k for k in range(ncol) if k not in barred and z[k] < 0), None)
            if j is None:
                return None
            best = None
            for i, row in enumerate(self.T):
                a = row[j]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return j
            self.pivot(best[1], j)

    def duals(self, cost: list[Fraction], art: list[int]) -> list[Fraction]:
        # B^-1 sits under the (initially identity) artificial columns.
        return [
            sum((cost[bi] * self.T[r][a] for r, bi in enumerate(self.basis) if cost[bi]), Fraction(0))
            for a in art
        ]


def lp_solve(p: LPProblem) -> LPResult:
    """Solve ``p`` exactly; see :class:`LPResult` for the certificate semantics."""
    n = len(p.objective)
    m = len(p.A)
    lower = p.bounds

    cols: list[tuple[int, int]] = []  # (original variable, sign)
    for j in range(n):
        cols.append((j, 1))
        if lower[j] is None:
            cols.append((j, -1))
    ns = len(cols)
    slack_of = {}
    for i, s in enumerate(p.senses):
        if s is not Sense.EQ:
            slack_of[i] = ns + len(slack_of)
    nsl = len(slack_of)
    art = [ns + nsl + i for i in range(m)]
    ncol = ns + nsl + m

    row_sign = []
    rows = []
    for i in range(m):
        a = p.A[i]
        shift = sum((a[j] * lower[j] for j in range(n) if lower[j] is not None and a[j]), Fraction(0))
        rhs = p.b[i] - shift
        row = [Fraction(0)] * (ncol + 1)
        for k, (j, sg) in enumerate(cols):
            if a[j]:
                row[k] = a[j] if sg > 0 else -a[j]
        if i in slack_of:
            row[slack_of[i]] = Fraction(1) if p.senses[i] is Sense.LE else Fraction(-1)
        row[-1] = rhs
        sgn = 1
        if rhs < 0:
            sgn = -1
            row = [-v for v in row]
        row[art[i]] = Fraction(1)
        row_sign.append(sgn)
        rows.append(row)

    tab = _Tableau(rows, list(art))
    cost1 = [Fraction(0)] * ns + [Fraction(0)] * nsl + [Fraction(1)] * m
    tab.run(cost1, barred=set())
    infeas = sum((tab.T[i][-1] for i, bi in enumerate(tab.basis) if bi in art), Fraction(0))
    if infeas > 0:
        y = tab.duals(cost1, art)
        return LPResult(Status.INFEASIBLE, None, None, _map_multipliers(p, y, row_sign))

    art_set = set(art)
    for i, bi in enumerate(tab.basis):
        if bi in art_set:
            j = next((k for k in range(ns + nsl) if tab.T[i][k] != 0), None)
            if j is not None:
                tab.pivot(i, j)

    cost2 = [Fraction(0)] * ncol
    for k, (j, sg) in enumerate(cols):
        cost2[k] = p.objective[j] if sg > 0 else -p.objective[j]
    col = tab.run(cost2, barred=art_set)

    values = [Fraction(0)] * ncol
    for i, bi in enumerate(tab.basis):
        values[bi] = tab.T[i][-1]

    if col is not None:
        d_std = [Fraction(0)] * ncol
        d_std[col] = Fraction(1)
        for i, bi in enumerate(tab.basis):
            d_std[bi] = -tab.T[i][col]
        d = [Fraction(0)] * n
        for k, (j, sg) in enumerate(cols):
            if d_std[k]:
                d[j] += d_std[k] if sg > 0 else -d_std[k]
        return LPResult(Status.UNBOUNDED, None, None, tuple(d))

    x = [Fraction(0) if lower[j] is None else lower[j] for j in range(n)]
    for k, (j, sg) in enumerate(cols):
        if values[k]:
            x[j] += values[k] if sg > 0 else -values[k]
    x = tuple(x)
    y = tab.duals(cost2, art)
    return LPResult(Status.OPTIMAL, dot(p.objective, x), x, _map_multipliers(p, y, row_sign))


def _map_multipliers(p: LPProblem, y: list[Fraction], row_sign: list[int]) -> RVector:
    out = []
    for i, s in enumerate(p.senses):
        w = y[i] * row_sign[i]
        out.append(w if s is Sense.GE else -w)
    return tuple(out)


def feasible_point(A, senses, b, lower=None) -> RVector | None:
    """Any point of the described region, or ``None`` when it is empty."""
    n = len(A[0])
    res = lp_solve(LPProblem(zeros(n), A, senses, b, lower))
    return res.x if res.status is Status.OPTIMAL else None
