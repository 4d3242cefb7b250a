from fractions import Fraction

import pytest
import sympy

from drinfeld_lab.catalog import catalog_triple
from drinfeld_lab.exactmath import Matrix
from drinfeld_lab.invariants import (
    TABLE1, NotApplicable, NotApplicableError, center_form_signature, dual_partners, first_difference,
    invariant_profile, jordan_chevalley, levi_restriction_class, mia_census, quotient_form_signature,
    quotient_spectrum, semisimple_split_coeffs, table1_row,
)
from drinfeld_lab.liecore import killing_gram
from drinfeld_lab.manin import build_double


def _split_oracle(label, params):
    # roots of det(B - l K) on the complexification, read off with sympy
    d = build_double(catalog_triple(label, params))
    k = sympy.Matrix(killing_gram(d.algebra).tolist())
    b = sympy.Matrix(d.form.tolist())
    lam = sympy.Symbol("l")
    roots = sympy.roots(sympy.Poly((k.inv() * b - lam * sympy.eye(6)).det(), lam))
    assert sorted(roots.values()) == [3, 3]
    r1, r2 = roots
    return Fraction(str(sympy.simplify(r1 + r2))), Fraction(str(sympy.simplify(r1 * r2)))


@pytest.mark.parametrize("label,params", [
    ("(9|5|b)", {"b": 3}), ("(8|5.i|b)", {"b": Fraction(1, 2)}),
    ("(7_a|7_{1/a}|b)", {"a": 3, "b": -1}), ("(6_a|6_{1/a}.i|b)", {"a": 2, "b": 2}),
])
def test_split_matches_oracle(label, params):
    q = semisimple_split_coeffs(catalog_triple(label, params))
    assert (q.s, q.p) == _split_oracle(label, params)


def test_split_not_applicable():
    with pytest.raises(NotApplicableError):
        semisimple_split_coeffs(catalog_triple("(9|1)"))


def test_levi_not_applicable_on_solvable():
    with pytest.raises(NotApplicableError):
        levi_restriction_class(catalog_triple("(5|1)"))


def test_levi_stable_over_lifts():
    t = catalog_triple("(7_0|4|b)", {"b": 2})
    assert {str(levi_restriction_class(t, lifts=5, seed=s)) for s in range(3)} == {"B|S = -1/2*K_S"}


def test_center_signatures():
    assert center_form_signature(catalog_triple("(2|2.i)")) == (0, 1, 2)
    assert center_form_signature(catalog_triple("(2|2.ii)")) == (1, 0, 2)


def test_jordan_chevalley_split():
    t = Matrix([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    s, n = jordan_chevalley(t)
    assert s == Matrix.diag([2, 2, 3]) and n @ n == Matrix.zeros(3)
    assert s @ n == n @ s


def test_quotient_invariants_separate_7_0_pair():
    a = catalog_triple("(7_0|2.i)")
    b = catalog_triple("(7_0|2.ii)")
    assert quotient_spectrum(a) == quotient_spectrum(b)
    assert quotient_form_signature(a) != quotient_form_signature(b)


def test_quotient_spectrum_distinguishes_7a():
    assert quotient_spectrum(catalog_triple("(7_a|1)", {"a": 2})) != quotient_spectrum(catalog_triple("(7_a|1)", {"a": 3}))


@pytest.mark.parametrize("label,params,count", [
    ("(7_a|1)", {"a": 2}, 2), ("(6_a|1)", {"a": 3}, 4), ("(5|1)", {}, 5),
    ("(4|1)", {}, 3), ("(7_0|1)", {}, 2), ("(7_0|2.i)", {}, 1),
])
def test_mia_counts(label, params, count):
    c = mia_census(catalog_triple(label, params), partners=False)
    assert c.complete and c.count == count


def test_mia_families_are_abelian_isotropic():
    d = build_double(catalog_triple("(5|1)"))
    for f in mia_census(d, partners=False).families:
        vecs = f.member()
        assert all(d.pairing(u, v) == 0 for u in vecs for v in vecs)
        assert all(not any(d.algebra.bracket(u, v)) for u in vecs for v in vecs)


def test_dual_partners_are_complements():
    d = build_double(catalog_triple("(6_a|1)", {"a": 2}))
    fam = mia_census(d, partners=False).families[0]
    found, real = dual_partners(d, fam.member())
    assert real and found
    basis, label = found[0]
    m = Matrix([list(v) for v in fam.member()] + [list(v) for v in basis])
    assert m.det() != 0
    assert label.type == "6_a"


def test_7_0_2i_has_no_partner():
    fam, = mia_census(catalog_triple("(7_0|2.i)")).families
    assert fam.dual_exists is False


def test_profile_of_semisimple():
    p = invariant_profile(catalog_triple("(9|5|b)", {"b": 1}))
    assert p.killing_signature == (3, 3, 0)
    assert isinstance(p.mia, NotApplicable)


def test_first_difference_names_invariant():
    p = invariant_profile(catalog_triple("(2|2.i)"))
    q = invariant_profile(catalog_triple("(2|2.ii)"))
    assert first_difference(p, q).startswith("center form signature")
    assert first_difference(p, p) is None


def test_table_rows_cover_catalog(grid_triples):
    from drinfeld_lab.catalog import BY_LABEL
    from drinfeld_lab.manin import dual_label
    for t in grid_triples:
        lbl = t.label if t.label in BY_LABEL else dual_label(t.label)
        assert table1_row(lbl, t.params) is not None, t
    assert len(TABLE1) == 14
