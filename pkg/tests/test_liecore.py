import random
from fractions import Fraction

import pytest

from drinfeld_lab.bianchi import NORMAL_FORM_LABELS, bianchi_classify, bianchi_normal_form, catalog_bianchi
from drinfeld_lab.exactmath import ContractViolation, Matrix, signature
from drinfeld_lab.liecore import (
    LieAlgebra, Subspace, center, check_jacobi, derived_algebra, killing_gram, levi_complement, radical,
    series_profile, subspace_predicates,
)

SO3 = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})
HEIS = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}})


def test_killing_so3_negative_definite():
    assert killing_gram(SO3) == Matrix.diag([-2, -2, -2])
    assert signature(killing_gram(SO3)) == (0, 3, 0)


def test_heisenberg_series():
    assert derived_algebra(HEIS).dim == 1
    assert center(HEIS).dim == 1
    assert series_profile(HEIS).as_tuple() == (1, 0, 0, 0, 0)


def test_jacobi_failure_detected():
    bad = LieAlgebra.from_brackets(3, {(0, 1): {1: 1}, (1, 2): {0: 1}})
    assert check_jacobi(bad)


def test_from_brackets_antisymmetry():
    assert HEIS.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)


def test_subspace_predicates():
    s = Subspace(HEIS, [(1, 0, 0), (0, 0, 1)])
    p = subspace_predicates(HEIS, s)
    assert p["is_subalgebra"] and p["is_abelian"]
    assert not subspace_predicates(HEIS, Subspace(HEIS, [(1, 0, 0), (0, 1, 0)]))["is_subalgebra"]


def test_change_basis_preserves_killing_signature():
    a = Matrix([[1, 2, 0], [0, 1, 0], [1, 0, 1]])
    assert signature(killing_gram(SO3.change_basis(a))) == (0, 3, 0)


def _gl2_plus():
    # sl(2) + R acting trivially, direct sum with an abelian ideal
    return LieAlgebra.from_brackets(4, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}})


def test_radical_and_levi():
    alg = _gl2_plus()
    rad = radical(alg)
    assert rad.dim == 1
    for seed in range(3):
        s = levi_complement(alg, rad, random.Random(seed))
        assert s.dim == 3 and subspace_predicates(alg, s)["is_subalgebra"]


@pytest.mark.parametrize("label", [x for x in NORMAL_FORM_LABELS if x not in ("6_a", "7_a")])
def test_normal_forms_classify_to_themselves(label):
    assert str(bianchi_classify(bianchi_normal_form(label))) == label


@pytest.mark.parametrize("kind,a", [("6_a", Fraction(2)), ("6_a", Fraction(1, 3)), ("7_a", Fraction(3, 2))])
def test_parametric_forms(kind, a):
    lbl = bianchi_classify(bianchi_normal_form(kind, a))
    assert lbl.type == kind and lbl.param == a


def test_classify_invariant_under_basis_change():
    alg = bianchi_normal_form("6_a", Fraction(2))
    moved = alg.change_basis(Matrix([[1, 1, 0], [0, 2, 1], [1, 0, 3]]))
    assert bianchi_classify(moved) == bianchi_classify(alg)


def test_alternative_names():
    assert str(catalog_bianchi("so(3)").identified_as) == "9"
    assert str(catalog_bianchi("sl(2,R)").identified_as) == "8"
    assert str(catalog_bianchi("n3").identified_as) == "2"
    with pytest.raises(ContractViolation):
        catalog_bianchi("6_1")
