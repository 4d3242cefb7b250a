from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from drinfeld_lab.exactmath import (
    ContractViolation, GaussianScalar, I, Matrix, Polynomial, char_poly, det, format_scalar, nullspace,
    parse_scalar, rank, rational_sqrt, signature,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def _sym(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])


@given(square(4))
def test_det_matches_sympy(rows):
    assert det(Matrix(rows)) == Fraction(str(_sym(rows).det()))


@given(square(4))
def test_char_poly_matches_sympy(rows):
    lam = sympy.Symbol("lam")
    ref = sympy.Poly(_sym(rows).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
    assert char_poly(Matrix(rows)).coeffs == tuple(Fraction(str(c)) for c in ref)


@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=3, max_size=3))
def test_rank_and_nullspace(rows):
    m = Matrix(rows)
    assert rank(m) == _sym(rows).rank()
    ns = nullspace(m)
    assert len(ns) == 5 - rank(m)
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(square(4))
def test_signature_matches_eigenvalues(rows):
    m = Matrix(rows)
    s = m + m.T
    ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in s.rows]))
    zero = int(np.sum(np.abs(ev) < 1e-9))
    assert signature(s) == (int(np.sum(ev > 1e-9)), int(np.sum(ev < -1e-9)), zero)


def test_signature_hyperbolic_pair():
    assert signature(Matrix([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(Matrix([[0, 0, 1], [0, 0, 0], [1, 0, 0]])) == (1, 1, 1)


def test_signature_rejects_nonsymmetric():
    with pytest.raises(ContractViolation):
        signature(Matrix([[1, 2], [0, 1]]))


def test_inverse_roundtrip():
    m = Matrix([[2, 1, 0], [0, 1, Fraction(1, 3)], [1, 0, 1]])
    assert m @ m.inverse() == Matrix.identity(3)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_parse_and_format_scalar():
    assert parse_scalar("-3/6") == Fraction(-1, 2)
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(Fraction(-2)) == "-2"
    for bad in ("0.5", "1/0", "x", ""):
        with pytest.raises(ContractViolation):
            parse_scalar(bad)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


def test_gaussian_arithmetic():
    z = GaussianScalar(1, 2)
    assert z * z.conjugate() == 5
    assert I * I == -1
    assert (z / z) == 1


def test_polynomial_ops():
    p = Polynomial.from_roots([1, 2, 3])
    assert p.coeffs == (-6, 11, -6, 1)
    q, r = p.divmod(Polynomial([-1, 1]))
    assert r.coeffs == () and q == Polynomial.from_roots([2, 3])
    assert Polynomial([1, 2, 1]).exact_root(2) == Polynomial([1, 1])
    assert p.rational_roots() == [1, 2, 3]
    assert Polynomial([1, 0, 1]).real_root_count() == 0
