"""Rational linear algebra and the exact simplex solver.

The LP oracle is brute-force vertex enumeration on boxed problems: every
basic solution is found by solving square subsystems, and the best feasible
one must match the simplex optimum.
"""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asymgauge.kernel import (
    DimensionError,
    LPProblem,
    LPResult,
    NoSolution,
    Sense,
    Status,
    dot,
    fmt_rat,
    lp_solve,
    nullspace,
    rank,
    rat,
    solve_linear,
    verify_certificate,
)

from conftest import small_rats

F = Fraction


# --- scalars ---------------------------------------------------------------


def test_rat_parses_fractions_and_decimals():
    assert rat("3/2") == F(3, 2)
    assert rat("1.5") == F(3, 2)
    assert rat(" -7 ") == -7
    assert rat(0.1) == F(3602879701896397, 36028797018963968)  # exact binary value


def test_rat_rejects_bad_input():
    with pytest.raises(TypeError):
        rat(True)
    with pytest.raises(ZeroDivisionError):
        rat("1/0")
    with pytest.raises(ValueError):
        rat("one")


def test_fmt_rat():
    assert fmt_rat(F(3)) == "3"
    assert fmt_rat(F(-6, 4)) == "-3/2"


# --- linear algebra --------------------------------------------------------


def test_solve_linear_unique():
    assert solve_linear([[2, 1], [1, 3]], [3, 5]) == (F(4, 5), F(7, 5))


def test_solve_linear_inconsistent_is_falsy():
    r = solve_linear([[1, 1], [2, 2]], [1, 3])
    assert isinstance(r, NoSolution)
    assert not r


def test_solve_linear_shape_errors():
    with pytest.raises(DimensionError):
        solve_linear([[1, 2]], [1, 2])


@given(st.lists(st.lists(small_rats(), min_size=3, max_size=3), min_size=3, max_size=3), st.lists(small_rats(), min_size=3, max_size=3))
def test_solve_linear_recovers_solution(A, x):
    b = [dot(r, x) for r in A]
    sol = solve_linear(A, b)
    assert sol
    assert [dot(r, sol) for r in A] == b
    if rank(A) == 3:
        assert tuple(sol) == tuple(x)


@given(st.lists(st.lists(small_rats(), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(A):
    ns = nullspace(A)
    assert rank(A) + len(ns) == 4
    for v in ns:
        assert all(dot(r, v) == 0 for r in A)


# --- LP: oracle ------------------------------------------------------------


def brute_force_lp(c, A, b):
    """min c.x over {A x <= b} by enumerating vertices; None if infeasible."""
    n = len(c)
    best = None
    for rows in itertools.combinations(range(len(A)), n):
        sub = [A[i] for i in rows]
        if rank(sub) < n:
            continue
        x = solve_linear(sub, [b[i] for i in rows])
        if all(dot(a, x) <= bi for a, bi in zip(A, b)):
            v = dot(c, x)
            if best is None or v < best:
                best = v
    return best


def random_boxed_lp(rng, n):
    A, b = [], []
    for i in range(n):
        e = [F(int(j == i)) for j in range(n)]
        A += [e, [-v for v in e]]
        b += [F(5), F(5)]
    for _ in range(rng.randint(1, 4)):
        A.append([F(rng.randint(-4, 4)) for _ in range(n)])
        b.append(F(rng.randint(-6, 6), rng.randint(1, 3)))
    rows = [(r, bi) for r, bi in zip(A, b) if any(r)]
    A, b = [r for r, _ in rows], [bi for _, bi in rows]
    c = [F(rng.randint(-5, 5)) for _ in range(n)]
    return c, A, b


def check_against_oracle(c, A, b):
    p = LPProblem(c, A, [Sense.LE] * len(A), b)
    res = lp_solve(p)
    assert res.verify(p)
    expected = brute_force_lp(c, A, b)
    if expected is None:
        assert res.status is Status.INFEASIBLE
    else:
        assert res.status is Status.OPTIMAL
        assert res.optimum == expected


def test_two_hundred_lps_match_vertex_enumeration():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 3)
        c, A, b = random_boxed_lp(rng, n)
        check_against_oracle(c, A, b)


@given(st.integers(0, 10**6))
def test_lp_matches_oracle_hypothesis(seed):
    c, A, b = random_boxed_lp(random.Random(seed), 2)
    check_against_oracle(c, A, b)


# --- LP: statuses and certificates ----------------------------------------


def test_lp_simple_optimum():
    p = LPProblem([1], [[1]], [">="], [1])
    res = lp_solve(p)
    assert res.status is Status.OPTIMAL and res.optimum == 1
    assert res.verify(p)


def test_lp_infeasible_farkas():
    p = LPProblem([0], [[1], [1]], ["<=", ">="], [-1, 1])
    res = lp_solve(p)
    assert res.status is Status.INFEASIBLE
    assert res.certificate == (1, 1)
    assert verify_certificate(p, res)


def test_lp_unbounded_ray():
    p = LPProblem([-1, 0], [[1, -1]], ["<="], [0], [0, 0])
    res = lp_solve(p)
    assert res.status is Status.UNBOUNDED
    d = res.certificate
    assert dot(p.objective, d) < 0 and res.verify(p)


def test_lp_equalities_and_lower_bounds():
    # min x + y  s.t. x + 2y = 4, x >= 1, y >= 0
    p = LPProblem([1, 1], [[1, 2]], ["="], [4], [1, 0])
    res = lp_solve(p)
    assert res.optimum == F(5, 2) and res.x == (1, F(3, 2))
    assert res.verify(p)


def test_gauge_of_scaled_square():
    # min t  s.t. (2, 0) in t * [-1,1]^2, i.e. t >= 2 and t >= -2
    p = LPProblem([1], [[1], [1]], [">=", ">="], [2, -2])
    assert lp_solve(p).optimum == 2


def test_forged_certificate_rejected():
    p = LPProblem([1], [[1]], [">="], [1])
    res = lp_solve(p)
    bad = LPResult(res.status, res.optimum + 1, res.x, res.certificate)
    assert not verify_certificate(p, bad)


def test_lp_deterministic():
    rng = random.Random(3)
    c, A, b = random_boxed_lp(rng, 3)
    p = LPProblem(c, A, ["<="] * len(A), b)
    assert lp_solve(p) == lp_solve(p)
    assert lp_solve(p).to_json() == lp_solve(p).to_json()


def test_lp_shape_validation():
    with pytest.raises(DimensionError):
        LPProblem([1, 2], [[1]], ["<="], [1])
    with pytest.raises(DimensionError):
        LPProblem([1], [[1]], ["<=", "<="], [1])
