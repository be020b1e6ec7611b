"""Random space generator and the law harness."""

import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asymgauge.lawcheck import (
    LAW_FUNCS,
    LAWS,
    Case,
    SpaceGenConfig,
    case_config,
    random_space,
    run_laws,
)
from asymgauge.polyhedra import validate_unit_ball
from asymgauge.serialize import poly_to_json


def test_config_validation():
    with pytest.raises(ValueError):
        SpaceGenConfig(dim=5)
    with pytest.raises(ValueError):
        SpaceGenConfig(n_vertices=2)
    with pytest.raises(ValueError):
        SpaceGenConfig(n_rays=4)


def test_no_rays_gives_trivial_theta():
    n = random_space(SpaceGenConfig(dim=2, n_rays=0, seed=1))
    assert n.theta.is_trivial


def test_one_ray_gives_single_ray_theta():
    n = random_space(SpaceGenConfig(dim=2, n_rays=1, seed=2))
    assert len(n.theta.rays) == 1


def test_generation_is_deterministic():
    cfg = SpaceGenConfig(dim=3, seed=9)
    a, b = random_space(cfg), random_space(cfg)
    assert poly_to_json(a.hrep) == poly_to_json(b.hrep)


@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(0, 3))
def test_generated_balls_are_valid(seed, dim, rays):
    cfg = SpaceGenConfig(dim=dim, n_rays=rays, n_vertices=4, seed=seed)
    n = random_space(cfg)
    assert validate_unit_ball(n.hrep).ok
    assert n.theta.is_pointed


def test_case_configs_replay():
    cfg = SpaceGenConfig(dim=2, seed=42)
    c = case_config(cfg, 3)
    assert c == case_config(cfg, 3)
    assert 3 <= c.n_vertices <= cfg.n_vertices and 0 <= c.n_rays <= cfg.n_rays


def test_all_laws_pass_dim2():
    report = run_laws(SpaceGenConfig(dim=2, seed=42), 12)
    assert report.passed, report.to_text()
    assert set(report.results) == set(LAWS)
    assert all(r.cases == 12 for r in report.results.values())


def test_cases_must_be_positive():
    with pytest.raises(ValueError):
        run_laws(SpaceGenConfig(), 0)


def test_unknown_law_rejected():
    with pytest.raises(ValueError):
        run_laws(SpaceGenConfig(), 1, laws=["L99"])


def test_mutation_breaks_sandwich_with_replayable_seed():
    cfg = SpaceGenConfig(dim=2, seed=5)
    report = run_laws(cfg, 4, laws=["L3"], mutate="L3")
    res = report.results["L3"]
    assert not res.passed and len(res.failures) == 4
    failure = report.to_json()["laws"]["L3"]["failures"][0]
    replay = SpaceGenConfig(**failure["config"])
    assert LAW_FUNCS["L3"](Case(replay, mutate="L3"))
    assert not LAW_FUNCS["L3"](Case(replay))


def test_law_independence():
    cfg = SpaceGenConfig(dim=2, seed=8)
    full = run_laws(cfg, 3).to_json()["laws"]
    for law in ("L4", "L9", "L13"):
        alone = run_laws(cfg, 3, laws=[law]).to_json()["laws"][law]
        assert alone == full[law]


def test_parallel_matches_serial():
    cfg = SpaceGenConfig(dim=2, seed=3)
    a = run_laws(cfg, 4, laws=["L1", "L5"]).to_json()
    b = run_laws(cfg, 4, laws=["L1", "L5"], workers=2).to_json()
    assert a == b


def test_report_json_shape():
    data = run_laws(dataclasses.replace(SpaceGenConfig(), seed=1), 1, laws=["L2"]).to_json()
    assert data["passed"] is True and data["laws"]["L2"]["cases"] == 1
