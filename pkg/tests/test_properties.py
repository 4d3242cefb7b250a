"""Algebraic identities checked on random data; no reference numbers involved."""


import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from drinfeld_lab.catalog import PRIMARY_LABELS, catalog_on_grid, catalog_triple, grid_points
from drinfeld_lab.exactmath import Matrix, congruent, signature
from drinfeld_lab.isomorph import DUALITY_WITNESS, compose, invert, verify_matrix
from drinfeld_lab.manin import B, basis_change_matrix, dualize, transform_triple
from drinfeld_lab.specio import document_triple, emit_triple, parse_document

entry = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def invertible(draw, n=3):
    m = Matrix(draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)))
    assume(m.det() != 0)
    return m


@st.composite
def symmetric(draw, n=4):
    a = draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n))
    return Matrix([[a[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)])


@st.composite
def triples(draw):
    label = draw(st.sampled_from(PRIMARY_LABELS))
    pts = grid_points(label)
    assume(pts)
    return catalog_triple(label, draw(st.sampled_from(pts)))


_SLOW = dict(suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


@settings(max_examples=1000, **_SLOW)
@given(invertible())
def test_form_invariant_under_basis_change(a):
    c = basis_change_matrix(a)
    assert c @ B @ c.T == B


@settings(max_examples=200, **_SLOW)
@given(symmetric(), invertible(4))
def test_signature_congruence_invariant(m, p):
    assert signature(congruent(m, p)) == signature(m)


@settings(max_examples=40, **_SLOW)
@given(triples(), invertible(), invertible())
def test_witness_composition_and_inversion(t, a1, a2):
    t1 = transform_triple(t, a1)
    t2 = transform_triple(t1, a2)
    c1, c2 = basis_change_matrix(a1), basis_change_matrix(a2)
    assert verify_matrix(c1, t, t1).valid and verify_matrix(c2, t1, t2).valid
    c12 = compose(c1, c2)
    assert verify_matrix(c12, t, t2).valid
    assert verify_matrix(invert(c12), t2, t).valid


@settings(max_examples=60, **_SLOW)
@given(triples())
def test_duality_involution(t):
    assert dualize(dualize(t)) == t
    assert verify_matrix(DUALITY_WITNESS, t, dualize(t)).valid
    assert compose(DUALITY_WITNESS, DUALITY_WITNESS) == Matrix.identity(6)


@pytest.mark.parametrize("t", catalog_on_grid(include_duals=False), ids=lambda t: t.display)
def test_parse_emit_roundtrip(t):
    text = emit_triple(t)
    back = document_triple(parse_document(text))
    assert back == t and back.params == t.params
    assert emit_triple(back) == text
