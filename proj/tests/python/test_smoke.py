from fractions import Fraction
import json

import pytest

import wnmanin


def test_factorize_round_trip():
    z = wnmanin.factorize([6, 10, 15])
    assert z == [1, 1, 2, 1, 3, 5, 1]
    assert wnmanin.compose(z) == [6, 10, 15]
    assert wnmanin.is_reduced(3, z)
    assert not wnmanin.is_reduced(3, [2, 2, 1, 1, 1, 1, 1])


def test_big_integers_survive():
    y = [2**70, 3**50, 6**30]
    assert wnmanin.compose(wnmanin.factorize(y)) == y


def test_counts():
    for method in ("direct", "moebius", "torsor"):
        assert wnmanin.count_points(3, 1, method)["count"] == 28
    r = wnmanin.count_points(3, 1000, "torsor", shards=2)
    assert r["count"] == 195004
    assert r["ratio"] > 0
    assert wnmanin.count_points_bruteforce(3, 2) == wnmanin.count_points(3, 8)["count"]


def test_polynomials():
    assert wnmanin.eulerian_polynomial(5) == [1, 26, 66, 26, 1]
    assert wnmanin.excedance_polynomial(4) == [1, 11, 11, 1]
    assert wnmanin.local_factor_poly_graph(3) == [1, 0, -9, 16, -9, 0, 1]
    assert wnmanin.local_density(3, 2) == Fraction(91, 512)


def test_toric():
    assert wnmanin.enumerate_variety("C", 3, 2)["count"] == 13
    x = wnmanin.enumerate_variety("X0", 3, 2)
    assert x["count"] == 91 and x["fiber_min"] == x["fiber_max"] == 7
    with pytest.raises(wnmanin.ResourceLimit):
        wnmanin.enumerate_variety("C", 6, 2)


def test_constants():
    v = wnmanin.polytope_volume(3)
    assert v["exact"] == Fraction(1, 16)
    c = wnmanin.assemble_constant(3, prime_limit=10000, mc_samples=200000)
    assert abs(c["relative_discrepancy"]) <= c["discrepancy_bound"]
    assert c["c_formula"] == pytest.approx(0.0029767, rel=1e-3)


def test_errors():
    with pytest.raises(wnmanin.ContractViolation):
        wnmanin.factorize([0, 1, 1])
    with pytest.raises(ValueError):
        wnmanin.count_points(3, 10, "fast")


def test_cli_and_verify():
    code, out, err = wnmanin.run_cli(["toric", "--kind", "C", "--n", "3", "--p", "2"])
    assert code == 0 and err == ""
    assert json.loads(out)["count"] == 13
    assert wnmanin.run_cli(["nope"])[0] == 1
    assert all(c["passed"] for c in wnmanin.verify("polynomials"))
