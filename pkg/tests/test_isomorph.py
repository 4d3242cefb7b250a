from fractions import Fraction

import pytest

from drinfeld_lab.catalog import catalog_triple
from drinfeld_lab.exactmath import ContractViolation, Matrix
from drinfeld_lab.isomorph import (
    DUALITY_WITNESS, PROOF_MATRICES, IsoCandidate, catalog_iso, compose, expected_class, invert, search_iso, verify_double_iso,
    verify_matrix,
)
from drinfeld_lab.manin import dualize


def test_identity_is_automorphism():
    t = catalog_triple("(5|1)")
    assert verify_matrix(Matrix.identity(6), t, t).valid


def test_singular_matrix_rejected():
    t = catalog_triple("(5|1)")
    rep = verify_matrix(Matrix.zeros(6), t, t)
    assert not rep.valid and "singular" in rep.diagnosis


def test_wrong_target_reports_violations():
    rep = verify_double_iso(IsoCandidate("(9|5|b)", "(8|5.ii|b)", Matrix.identity(6), {"b": 1}, {"b": 1}))
    assert not rep.valid and rep.bracket_violations


def test_duality_witness():
    t = catalog_triple("(7_0|4|b)", {"b": 2})
    assert verify_matrix(DUALITY_WITNESS, t, dualize(t)).valid


def test_catalog_iso_needs_params():
    with pytest.raises(ContractViolation):
        catalog_iso("(9|5|b)", "(8|5.ii|b)")


def test_composition_of_proof_matrices():
    a = catalog_iso("(5|1)", "(5|2.i)").matrix
    b = catalog_iso("(5|1)", "(6_0|1)").matrix
    assert verify_matrix(compose(invert(a), b), catalog_triple("(5|2.i)"), catalog_triple("(6_0|1)")).valid


def test_proof_matrix_count():
    assert len(PROOF_MATRICES) == 24


def test_search_finds_witness():
    res = search_iso(catalog_triple("(5|1)"), catalog_triple("(5|2.i)"))
    assert res.status == "found"
    assert verify_matrix(res.witness, catalog_triple("(5|1)"), catalog_triple("(5|2.i)")).valid


def test_search_reports_invariant_difference():
    res = search_iso(catalog_triple("(2|2.i)"), catalog_triple("(2|2.ii)"))
    assert res.status == "non-isomorphic" and "center" in res.reason


def test_search_budget_validated():
    with pytest.raises(ContractViolation):
        search_iso(catalog_triple("(5|1)"), catalog_triple("(5|1)"), budget=0)


def test_expected_class_mapping():
    assert expected_class("(6_0|4.i|b)", {"b": 2}) == (7, {"b": -2})
    assert expected_class("(7_a|1)", {"a": Fraction(1, 2)})[0] == 14
    assert expected_class("(7_a|1)", {"a": 1})[0] == 18
    assert expected_class("(1|7_a)", {"a": 2})[0] == 9
