import json
from fractions import Fraction

import pytest

import jordan_cg


def test_verify_sl2():
    doc = jordan_cg.verify("sl2", j="3/2")
    assert doc["command"] == "verify"
    assert all(c["passed"] for c in doc["checks"])
    assert all(ok for _, ok in jordan_cg.verify_sl2("1"))


def test_negative_spin_is_rejected():
    with pytest.raises(ValueError, match="2j must be a nonnegative integer"):
        jordan_cg.verify("sl2", j="-1")


def test_decomposition_dimensions():
    for j1, j2 in [("1", "3/2"), ("0", "0"), ("5/2", "2")]:
        dims = sum(n * (2 * Fraction(j) + 1) for j, n in jordan_cg.decomposition(j1, j2))
        assert dims == (2 * Fraction(j1) + 1) * (2 * Fraction(j2) + 1)
    assert jordan_cg.decomposition("1", "3/2") == [("5/2", 1), ("3/2", 1), ("1/2", 1)]


def test_alpha_routes_agree():
    closed = jordan_cg.alpha_table("1", "1", "1", "-1")
    assert closed[(0, 2)] == "1/4*h^2"
    assert closed == jordan_cg.alpha_table("1", "1", "1", "-1", route="rec1")
    assert closed == jordan_cg.alpha_table("1", "1", "1", "-1", route="rec3")


def test_su11_eigvec():
    doc = jordan_cg.eigvec("su11", kappa1="1/2", mu1="1/2", kappa2=1, mu2=1, degree=4)
    assert len(doc["entries"]) == 15
    assert all(c["passed"] for c in doc["checks"])


def test_cgtable_and_render():
    doc = jordan_cg.cgtable(j1="1/2", j2="1/2")
    assert json.loads(jordan_cg._core.cg_table("1/2", "1/2")) == doc
    assert [(s["j"], s["m"]) for s in doc["entries"]] == [("1", "1"), ("1", "0"), ("1", "-1"), ("0", "0")]
    tex = jordan_cg.render(json.dumps(doc), "latex")
    assert r"\ket{0\; 0}" in tex
    with pytest.raises(ValueError):
        jordan_cg.render(json.dumps(doc), "xml")


def test_cgtable_su11_rejected():
    with pytest.raises(ValueError, match="sl2 family only"):
        jordan_cg.cgtable("su11", j1="1", j2="1")
