import pytest

import rockblock


def test_core_quotient():
    r = rockblock.core_quotient([3, 1], 2)
    assert r["core"] == []
    assert r["weight"] == 2
    assert rockblock.core_quotient([], 3)["weight"] == 0


def test_bad_partition():
    with pytest.raises(ValueError):
        rockblock.core_quotient([3, 5], 2)


def test_rouquier():
    assert rockblock.rouquier_core([2], 2, 2) is None
    core = rockblock.make_rouquier_core(3, 2)
    assert rockblock.rouquier_core(core["rho"], 2, 3) is not None


def test_rock_dim_d1():
    r = rockblock.rock_dim(3, 1, [1], [1], [1], [2])
    assert r["value"] == {"1": 1}
    with pytest.raises(rockblock.DomainError):
        rockblock.rock_dim(2, 2, [2], [1], [2], [1], rho=[2])


def test_module_dim():
    assert rockblock.module_dim(3, [2], [1]) == 9


def test_verify_suites():
    assert rockblock.verify("wreath", 2, 2)["results"]["dim_W"] == 8
    assert rockblock.verify("counting", 3, 2, 2)["passed"]
    assert rockblock.verify("zigzag", 4)["passed"]


def test_rank_report():
    r = rockblock.rank_report(2, 2, 2)
    assert r["t"] == r["double"]
    assert r["degree_zero"] == r["degree_zero_formula"]


def test_simple_count():
    s = rockblock.simple_count(3, 2)
    assert s["pj"] == s["regular"]
    assert s["pi"] == s["block"]
