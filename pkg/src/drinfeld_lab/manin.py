"""Manin triples ``(G|G~)`` and the 6-dimensional Drinfeld doubles they generate.

Basis order of a double is ``(X1, X2, X3, X~1, X~2, X~3)``.  The pairing is the
constant matrix ``B`` with identity off-diagonal blocks, and the brackets are

    [X_i, X_j]   = f_ij^k X_k
    [X~i, X~j]   = ft^ij_k X~k
    [X_i, X~j]   = f_ki^j X~k + ft^jk_i X_k
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactmath import ContractViolation, Matrix, format_scalar
from .liecore import LieAlgebra, Subspace, check_jacobi, subspace_predicates

DOUBLE_LABELS = ("X1", "X2", "X3", "X~1", "X~2", "X~3")


class InvalidTriple(ValueError):
    """The pair of structure tensors does not define a Manin triple."""


def canonical_form() -> Matrix:
    """The pairing ``<X_i, X~j> = delta_ij`` with both blocks isotropic."""
    return Matrix([[int(abs(i - j) == 3) for j in range(6)] for i in range(6)])


B = canonical_form()


def mixed_jacobi_violations(f: LieAlgebra, ft: LieAlgebra) -> list[tuple[int, int, int, int]]:
    """1-based ``(i, j, k, m)`` where the mixed Jacobi identity fails.

    ``f.c[i][j][k] = f_ij^k`` and ``ft.c[i][j][k] = ft^ij_k``.  This is the
    X~-component of ``[X_m, [X~j, X~k]] + cyclic``; the last term carries a
    minus sign so that the expression is antisymmetric in ``j, k``.
    """
    F, T = f.c, ft.c
    bad = []
    r = range(3)
    for i in r:
        for j in r:
            for k in r:
                for m in r:
                    s = Fraction(0)
                    for l in r:
                        s += (T[j][k][l] * F[m][i][l] + T[k][l][m] * F[l][i][j]
                              + T[j][l][i] * F[l][m][k] + T[j][l][m] * F[i][l][k]
                              - T[k][l][i] * F[l][m][j])
                    if s:
                        bad.append((i + 1, j + 1, k + 1, m + 1))
    return bad


def _params_text(params: Mapping) -> str:
    return ", ".join(f"{k}={format_scalar(v)}" for k, v in sorted(params.items()))


@dataclass(frozen=True, eq=False)
class ManinTriple:
    """Structure constants of ``G`` and ``G~`` in mutually dual bases.

    ``label`` is the catalog identifier (``"(8|5.ii|b)"``), ``params`` the
    exact bindings used to instantiate it.  Equality compares the constants
    only, so a triple equals its double dual regardless of naming.
    """

    label: str
    f: LieAlgebra
    ft: LieAlgebra
    params: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.f.dim != 3 or self.ft.dim != 3:
            raise InvalidTriple("both subalgebras must be 3-dimensional")
        bad_f = check_jacobi(self.f)
        if bad_f:
            raise InvalidTriple(f"{self.label}: Jacobi identity fails in G at {bad_f}")
        bad_ft = check_jacobi(self.ft)
        if bad_ft:
            raise InvalidTriple(f"{self.label}: Jacobi identity fails in G~ at {bad_ft}")
        bad_mixed = mixed_jacobi_violations(self.f, self.ft)
        if bad_mixed:
            raise InvalidTriple(f"{self.label}: mixed Jacobi identity fails at (i,j,k,m)={bad_mixed[0]}")

    def __eq__(self, other):
        return isinstance(other, ManinTriple) and self.f == other.f and self.ft == other.ft

    def __hash__(self):
        return hash((self.f, self.ft))

    @property
    def display(self) -> str:
        return f"{self.label} {_params_text(self.params)}" if self.params else self.label

    def __repr__(self):
        return f"ManinTriple({self.display})"


def dual_label(label: str) -> str:
    """``"(8|5.ii|b)" -> "(5.ii|8|b)"``; an involution on labels."""
    body = label.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ContractViolation(f"malformed triple label {label!r}")
    parts = body[1:-1].split("|")
    if len(parts) not in (2, 3):
        raise ContractViolation(f"malformed triple label {label!r}")
    parts[0], parts[1] = parts[1], parts[0]
    return "(" + "|".join(parts) + ")"


def dualize(t: ManinTriple) -> ManinTriple:
    """Swap the roles of ``G`` and ``G~``."""
    return ManinTriple(dual_label(t.label), t.ft, t.f, dict(t.params))


@dataclass(frozen=True, eq=False)
class DoubleAlgebra:
    """A Drinfeld double in the canonical basis, with its pairing ``B``."""

    algebra: LieAlgebra
    form: Matrix
    triple: ManinTriple | None = None

    @property
    def name(self) -> str:
        return self.triple.display if self.triple is not None else "<double>"

    def pairing(self, u, v):
        return sum((u[i] * v[j] for i in range(6) for j in range(6) if self.form.rows[i][j]), Fraction(0))

    def __repr__(self):
        return f"DoubleAlgebra({self.name})"

    def subspace(self, vectors) -> Subspace:
        return Subspace(self.algebra, vectors)


def double_constants(f: LieAlgebra, ft: LieAlgebra) -> list:
    F, T = f.c, ft.c
    c = [[[Fraction(0)] * 6 for _ in range(6)] for _ in range(6)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                c[i][j][k] = F[i][j][k]
                c[3 + i][3 + j][3 + k] = T[i][j][k]
            # [X_i, X~j] = f_ki^j X~k + ft^jk_i X_k
            for k in range(3):
                v = F[k][i][j]
                c[i][3 + j][3 + k] += v
                c[3 + j][i][3 + k] -= v
                w = T[j][k][i]
                c[i][3 + j][k] += w
                c[3 + j][i][k] -= w
    return c


def build_double(t: ManinTriple) -> DoubleAlgebra:
    alg = LieAlgebra(double_constants(t.f, t.ft), DOUBLE_LABELS)
    bad = check_jacobi(alg)
    if bad:
        raise InvalidTriple(f"{t.label}: assembled double violates Jacobi at {bad[0]}")
    d = DoubleAlgebra(alg, B, t)
    return d


def ad_invariance_violations(d: DoubleAlgebra) -> list[tuple[int, int, int]]:
    """Basis triples where ``<[x,y],z> + <y,[x,z]>`` is nonzero."""
    e = d.algebra.basis()
    bad = []
    for a in range(6):
        for b in range(6):
            for c in range(6):
                if d.pairing(d.algebra.bracket(e[a], e[b]), e[c]) + d.pairing(e[b], d.algebra.bracket(e[a], e[c])):
                    bad.append((a + 1, b + 1, c + 1))
    return bad


def is_isotropic(d: DoubleAlgebra, s: Subspace) -> bool:
    return all(not d.pairing(u, v) for u in s.basis for v in s.basis)


def is_maximally_isotropic(d: DoubleAlgebra, s: Subspace) -> bool:
    return s.dim == 3 and is_isotropic(d, s)


def defining_subalgebras(d: DoubleAlgebra) -> tuple[Subspace, Subspace]:
    e = d.algebra.basis()
    return Subspace(d.algebra, e[:3]), Subspace(d.algebra, e[3:])


def axiom_report(t: ManinTriple) -> dict:
    """Every axiom the catalog promises, as booleans."""
    d = build_double(t)
    g, gt = defining_subalgebras(d)
    return {
        "jacobi_G": not check_jacobi(t.f),
        "jacobi_Gtilde": not check_jacobi(t.ft),
        "mixed_jacobi": not mixed_jacobi_violations(t.f, t.ft),
        "jacobi_double": not check_jacobi(d.algebra),
        "ad_invariant_form": not ad_invariance_violations(d),
        "G_max_isotropic_subalgebra": is_maximally_isotropic(d, g) and subspace_predicates(d.algebra, g)["is_subalgebra"],
        "Gtilde_max_isotropic_subalgebra": is_maximally_isotropic(d, gt) and subspace_predicates(d.algebra, gt)["is_subalgebra"],
    }


def basis_change_matrix(a: Matrix) -> Matrix:
    """6x6 row matrix of ``X'_i = X_k A^k_i``, ``X~'^j = (A^-1)^j_k X~k``."""
    ainv = a.inverse()
    at = a.T
    rows = []
    for i in range(3):
        rows.append(list(at.rows[i]) + [0, 0, 0])
    for j in range(3):
        rows.append([0, 0, 0] + list(ainv.rows[j]))
    return Matrix(rows)


def transform_triple(t: ManinTriple, a: Matrix) -> ManinTriple:
    """The triple expressed in the bases ``X' = X A``, ``X~' = A^-1 X~``."""
    dbl = build_double(t).algebra.change_basis(basis_change_matrix(a))
    f = [[[dbl.c[i][j][k] for k in range(3)] for j in range(3)] for i in range(3)]
    ft = [[[dbl.c[3 + i][3 + j][3 + k] for k in range(3)] for j in range(3)] for i in range(3)]
    return ManinTriple(t.label, LieAlgebra(f, ("X1", "X2", "X3")), LieAlgebra(ft, ("X~1", "X~2", "X~3")), dict(t.params))
