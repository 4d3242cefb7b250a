from fractions import Fraction

import pytest

from drinfeld_lab.catalog import GRID_ENV, PRIMARY_LABELS, catalog_triple, default_grid, grid_points, parse_grid
from drinfeld_lab.exactmath import ContractViolation, Matrix
from drinfeld_lab.liecore import LieAlgebra, check_jacobi
from drinfeld_lab.manin import (
    B, InvalidTriple, ManinTriple, ad_invariance_violations, axiom_report, basis_change_matrix, build_double,
    dual_label, dualize, transform_triple,
)


def test_catalog_size():
    assert len(PRIMARY_LABELS) == 44


def test_double_of_9_5():
    t = catalog_triple("(9|5|b)", {"b": 1})
    d = build_double(t)
    assert d.form == B
    assert not check_jacobi(d.algebra)
    assert not ad_invariance_violations(d)


def test_axioms_on_one_triple():
    assert all(axiom_report(catalog_triple("(6_a|6_{1/a}.i|b)", {"a": 2, "b": -1})).values())


def test_mixed_jacobi_rejects_bad_pair():
    so3 = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})
    with pytest.raises(InvalidTriple):
        ManinTriple("(9|9)", so3, so3)


def test_dual_label_involution():
    for lbl in PRIMARY_LABELS:
        assert dual_label(dual_label(lbl)) == lbl
    assert dual_label("(8|5.ii|b)") == "(5.ii|8|b)"


def test_dualize_twice_is_identity():
    t = catalog_triple("(7_0|4|b)", {"b": 2})
    assert dualize(dualize(t)) == t


def test_basis_change_preserves_form():
    a = Matrix([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    c = basis_change_matrix(a)
    assert c @ B @ c.T == B
    t = catalog_triple("(5|2.i)")
    assert all(axiom_report(transform_triple(t, a)).values())


def test_domains_enforced():
    with pytest.raises(ContractViolation):
        catalog_triple("(9|5|b)", {"b": -1})
    with pytest.raises(ContractViolation):
        catalog_triple("(9|5|b)")
    with pytest.raises(ContractViolation):
        catalog_triple("(10|1)")


def test_dual_label_lookup():
    t = catalog_triple("(5.ii|8|b)", {"b": 1})
    assert t == dualize(catalog_triple("(8|5.ii|b)", {"b": 1}))


def test_grid_parsing(monkeypatch):
    g = parse_grid("a=2,1/2;b=-1")
    assert g == {"a": (Fraction(2), Fraction(1, 2)), "b": (Fraction(-1),)}
    monkeypatch.setenv(GRID_ENV, "a=3;b=1")
    assert default_grid()["a"] == (Fraction(3),)
    monkeypatch.delenv(GRID_ENV)
    assert Fraction(1, 2) in default_grid()["a"]
    with pytest.raises(ContractViolation):
        parse_grid("a=0.5")


def test_grid_points_respect_domain():
    pts = grid_points("(9|5|b)", {"b": (Fraction(1), Fraction(-1))})
    assert pts == [{"b": Fraction(1)}]
