import os
from fractions import Fraction
from pathlib import Path

import pytest

import brane

DATA = Path(os.environ.get("BRANE_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


@pytest.fixture(scope="module")
def s3():
    return brane.read_model(str(DATA / "s3.model"))


@pytest.fixture(scope="module")
def s4():
    return brane.read_model(str(DATA / "s4.model"))


def test_parse_and_print_round_trip():
    V = brane.parse_model("model T\ngen a 2\ngen b 3\nd b = a^2\ninfo m = 5\n")
    assert V.name == "T"
    assert V.generators == [("a", 2), ("b", 3)]
    assert V.m == 5
    W = brane.parse_model(str(V))
    assert W.generators == V.generators
    assert W.d("b") == V.d("b") == "a^2"


def test_parse_error_is_value_error():
    with pytest.raises(brane.ParseError) as info:
        brane.parse_model("gen a 2\nd a = b\n")
    assert isinstance(info.value, ValueError)
    assert "2:" in str(info.value)


def test_bad_differential_has_witness():
    V = brane.read_model(str(DATA / "bad_d2.model"))
    w = V.check_d_squared(6)
    assert w == {"degree": 1, "input": "a", "value": "c"}


def test_free_loop_model_betti_numbers(s3):
    M = brane.sphere_model(s3, 2)
    assert M.generators == [("x", 3), ("s1_x", 2)]
    # H^*(LS^3) is one-dimensional in degree 0 and in every degree >= 2
    assert [M.betti(n) for n in range(9)] == [1, 0, 1, 1, 1, 1, 1, 1, 1]


def test_disk_and_path_models_are_contractible_onto_base(s4):
    D = brane.disk_model(s4, 2)
    P = brane.path_model(s4)
    for n in range(9):
        assert D.betti(n) == s4.betti(n)
        assert P.betti(n) == s4.betti(n)


def test_gorenstein_dimensions(s3, s4):
    assert brane.gorenstein_info(s3) == {"p": 0, "q": 1, "m": 3, "mbar": -1}
    assert brane.gorenstein_info(s4)["m"] == 4


def test_product_dual_values(s3):
    mu = brane.product_dual(s3)
    assert mu.shift == 3
    assert mu.arity == (1, 2)
    assert mu(("1",)) == {("1", "x"): Fraction(1), ("x", "1"): Fraction(-1)}
    assert mu(("x",)) == {("x", "x"): Fraction(-1)}
    with pytest.raises(KeyError):
        mu(("y",))


def test_checkers_and_negative_control(s3):
    mu = brane.product_dual(s3)
    delta = brane.coproduct_dual(s3)
    assert brane.check_associativity(mu, 6)["passed"]
    assert brane.check_commutativity(delta, 6)["passed"]
    assert brane.check_frobenius(mu, delta, 6)["passed"]
    broken = brane.perturb(mu, 1, 1, 6)
    assert not brane.check_associativity(broken, 6)["passed"]


def test_homology_degrees(s3):
    h = brane.to_homology(brane.product_dual(s3))
    assert h.kind == "homology_product"
    assert [deg for _, deg, _ in h.basis] == [-3, -2, 0, 1]


def test_coproduct_vanishes_for_even_sphere(s4):
    report = brane.check_zero(brane.coproduct_dual(s4, 2, 8))
    assert report["passed"]


def test_odd_sphere_table(s3):
    tab = brane.odd_sphere_table(s3)
    assert tab["exterior"]
    assert (tab["deg_y"], tab["deg_z"]) == (-3, 1)
    computed = {e["lhs"]: e["computed"] for e in tab["coproduct"]}
    assert computed["δ(1)"] == "1⊗yz - y⊗z + z⊗y + yz⊗1"
    # the top class squares with a plus sign; see the README
    assert computed["δ(yz)"] == "yz⊗yz"


def test_run_exit_codes(s3):
    code, out, err = brane.run("check-dga", str(DATA / "s3.model"))
    assert (code, err) == (0, "")
    assert out.startswith("PASS")
    code, _, err = brane.run("cohomology", str(DATA / "syntax_error.model"))
    assert code == 2 and err
    code, _, _ = brane.run("verify", str(DATA / "s3.model"), suite="assoc", max_degree=6)
    assert code == 0
