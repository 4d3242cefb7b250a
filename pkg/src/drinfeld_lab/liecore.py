"""Lie algebras given by structure constants, and their basic invariants."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactmath import ContractViolation, Matrix, nullspace, to_scalar


class InternalConsistencyError(RuntimeError):
    """An exact post-condition failed; indicates a bug, not bad input."""


class UnsupportedCase(ValueError):
    """The input lies outside the cases an algorithm is written for."""


Vector = tuple  # tuple of Fractions


def _zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def _unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(i == j)) for j in range(n))


class LieAlgebra:
    """Finite-dimensional algebra with bracket ``[e_i, e_j] = sum_k c[i][j][k] e_k``.

    Antisymmetry is checked at construction.  The Jacobi identity is *not*
    enforced here (use :func:`check_jacobi`), since broken tensors are
    legitimate inputs for the checker.
    """

    __slots__ = ("dim", "c", "labels")

    def __init__(self, constants, labels: Sequence[str] | None = None):
        c = tuple(tuple(tuple(to_scalar(x) for x in row) for row in plane) for plane in constants)
        n = len(c)
        if any(len(p) != n or any(len(r) != n for r in p) for p in c):
            raise ContractViolation("structure constants must be an n x n x n tensor")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if c[i][j][k] != -c[j][i][k]:
                        raise ContractViolation(
                            f"structure constants not antisymmetric at ({i + 1},{j + 1},{k + 1})"
                        )
        self.dim = n
        self.c = c
        self.labels = tuple(labels) if labels else tuple(f"e{i + 1}" for i in range(n))
        if len(self.labels) != n:
            raise ContractViolation("wrong number of basis labels")

    @classmethod
    def from_brackets(cls, n: int, brackets: dict, labels=None) -> LieAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` with 0-based indices, completing antisymmetry."""
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), rhs in brackets.items():
            for k, v in rhs.items():
                v = to_scalar(v)
                c[i][j][k] += v
                c[j][i][k] -= v
        return cls(c, labels)

    @classmethod
    def abelian(cls, n: int, labels=None) -> LieAlgebra:
        return cls([[[0] * n for _ in range(n)] for _ in range(n)], labels)

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={self.bracket_table()})"

    def bracket_table(self) -> dict:
        """Nonzero brackets ``{(i, j): {k: coeff}}`` for ``i < j``."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                row = {k: v for k, v in enumerate(self.c[i][j]) if v}
                if row:
                    out[(i, j)] = row
        return out

    def is_abelian(self) -> bool:
        return all(not v for p in self.c for r in p for v in r)

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = ui * vj
                row = self.c[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] += w * row[k]
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``ad x`` acting on column coordinate vectors."""
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def basis(self) -> list[Vector]:
        return [_unit(self.dim, i) for i in range(self.dim)]

    def change_basis(self, rows: Matrix | Sequence[Sequence], labels=None) -> LieAlgebra:
        """Structure constants in the basis ``Y'_a = sum_b rows[a][b] Y_b``."""
        m = rows if isinstance(rows, Matrix) else Matrix(rows)
        if m.shape != (self.dim, self.dim):
            raise ContractViolation("change of basis must be square of the algebra dimension")
        inv = m.inverse()
        new = [[None] * self.dim for _ in range(self.dim)]
        for a in range(self.dim):
            for b in range(self.dim):
                w = self.bracket(m.rows[a], m.rows[b])
                # coordinates of w in the new basis: w = x @ m  ->  x = w @ m^-1
                new[a][b] = tuple(sum((w[r] * inv.rows[r][c] for r in range(self.dim)), Fraction(0))
                                  for c in range(self.dim))
        return LieAlgebra(new, labels)

    def restrict(self, sub: Subspace, labels=None) -> LieAlgebra:
        """Structure constants of a subalgebra in the subspace's own basis."""
        if not subspace_predicates(self, sub)["is_subalgebra"]:
            raise ContractViolation("subspace is not closed under the bracket")
        k = sub.dim
        c = [[None] * k for _ in range(k)]
        for a in range(k):
            for b in range(k):
                c[a][b] = sub.coordinates(self.bracket(sub.basis[a], sub.basis[b]))
        return LieAlgebra(c, labels)


# --------------------------------------------------------------------------
# subspaces


def independent_span(vectors: Iterable[Sequence], n: int) -> tuple[Vector, ...]:
    """Echelon basis of the span (rows of the RREF), so equal spans give equal bases."""
    vs = [tuple(to_scalar(x) for x in v) for v in vectors]
    if not vs:
        return ()
    red, piv = Matrix(vs, ncols=n).rref()
    return tuple(red.rows[i] for i in range(len(piv)))


class Subspace:
    """A linear subspace of a parent algebra, stored with an explicit basis."""

    __slots__ = ("parent", "basis", "_echelon")

    def __init__(self, parent: LieAlgebra, basis: Iterable[Sequence]):
        b = tuple(tuple(to_scalar(x) for x in v) for v in basis)
        if any(len(v) != parent.dim for v in b):
            raise ContractViolation("basis vector length differs from the algebra dimension")
        if b and Matrix(b).rank() != len(b):
            raise ContractViolation("subspace basis vectors are linearly dependent")
        self.parent = parent
        self.basis = b
        self._echelon = independent_span(b, parent.dim)

    @classmethod
    def span(cls, parent: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
        return cls(parent, independent_span(vectors, parent.dim))

    @classmethod
    def whole(cls, parent: LieAlgebra) -> Subspace:
        return cls(parent, parent.basis())

    @classmethod
    def zero(cls, parent: LieAlgebra) -> Subspace:
        return cls(parent, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self._echelon == other._echelon

    def __hash__(self):
        return hash(self._echelon)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[list(map(str, v)) for v in self.basis]})"

    def contains(self, v: Sequence) -> bool:
        if not any(v):
            return True
        if not self.basis:
            return False
        return Matrix(list(self.basis) + [tuple(v)]).rank() == self.dim

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in this basis; raises if ``v`` is outside."""
        if not self.basis:
            if any(v):
                raise ContractViolation("vector not in the zero subspace")
            return ()
        sol = Matrix.from_columns(self.basis).solve(v)
        if sol is None:
            raise ContractViolation("vector not in subspace")
        return sol

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.parent, self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        if not self.basis or not other.basis:
            return Subspace.zero(self.parent)
        # a.x = b.y  ->  nullspace of [A | -B]
        cols = list(self.basis) + [tuple(-x for x in v) for v in other.basis]
        ns = nullspace(Matrix.from_columns(cols))
        vecs = []
        for s in ns:
            w = [Fraction(0)] * self.parent.dim
            for coef, v in zip(s[: self.dim], self.basis):
                for t in range(len(w)):
                    w[t] += coef * v[t]
            vecs.append(w)
        return Subspace.span(self.parent, vecs)

    def label(self) -> str:
        return "span{" + ", ".join(format_vector(v, self.parent.labels) for v in self.basis) + "}"


def format_vector(v: Sequence, labels: Sequence[str]) -> str:
    from .exactmath import format_scalar

    parts = []
    for x, name in zip(v, labels):
        if not x:
            continue
        if x == 1:
            term = name
        elif x == -1:
            term = "-" + name
        else:
            term = f"{format_scalar(x)}*{name}"
        parts.append(term)
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += " - " + p[1:] if p.startswith("-") else " + " + p
    return s


def bracket_space(alg: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    return Subspace.span(alg, [alg.bracket(a, b) for a in u.basis for b in v.basis])


def subspace_predicates(alg: LieAlgebra, s: Subspace) -> dict:
    """``is_subalgebra`` / ``is_abelian`` / ``is_ideal`` by bracketing basis vectors."""
    brs = [alg.bracket(a, b) for i, a in enumerate(s.basis) for b in s.basis[i + 1:]]
    abelian = all(not any(w) for w in brs)
    sub = abelian or all(s.contains(w) for w in brs)
    ideal = sub and all(s.contains(alg.bracket(a, e)) for a in s.basis for e in alg.basis())
    return {"is_subalgebra": sub, "is_abelian": abelian, "is_ideal": ideal}


# --------------------------------------------------------------------------
# axioms and forms


def check_jacobi(alg: LieAlgebra) -> list[tuple[int, int, int]]:
    """1-based triples ``i < j < k`` where the cyclic Jacobi sum is nonzero."""
    n = alg.dim
    c = alg.c
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(n):
                    s = Fraction(0)
                    for m in range(n):
                        s += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l]
                    if s:
                        bad.append((i + 1, j + 1, k + 1))
                        break
    return bad


def killing_gram(alg: LieAlgebra) -> Matrix:
    n = alg.dim
    c = alg.c
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            s = Fraction(0)
            for x in range(n):
                for y in range(n):
                    if c[a][x][y] and c[b][y][x]:
                        s += c[a][x][y] * c[b][y][x]
            row.append(s)
        rows.append(row)
    return Matrix(rows)


def form_on(gram: Matrix, s: Subspace) -> Matrix:
    """Gram matrix of a bilinear form restricted to a subspace basis."""
    if s.dim == 0:
        return Matrix([], ncols=0)
    b = Matrix(s.basis)
    return b @ gram @ b.T


# --------------------------------------------------------------------------
# series, center, radical


@dataclass(frozen=True)
class SeriesProfile:
    """Dimensions of ``[D,D]``, ``D^2, D^3`` (lower central) and ``D_2, D_3`` (derived)."""

    commutant: int
    lower2: int
    lower3: int
    derived2: int
    derived3: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.commutant, self.lower2, self.lower3, self.derived2, self.derived3)


def derived_algebra(alg: LieAlgebra) -> Subspace:
    whole = Subspace.whole(alg)
    return bracket_space(alg, whole, whole)


def series_spaces(alg: LieAlgebra) -> tuple[Subspace, Subspace, Subspace, Subspace, Subspace]:
    """``[D,D]``, ``D^2``, ``D^3`` and ``D_2``, ``D_3`` as subspaces.

    ``D^{i+1} = [D^i, D]`` and ``D_{i+1} = [D_i, D_i]`` with ``D^1 = D_1 = [D,D]``.
    """
    whole = Subspace.whole(alg)
    d1 = bracket_space(alg, whole, whole)
    low2 = bracket_space(alg, d1, whole)
    low3 = bracket_space(alg, low2, whole)
    if bracket_space(alg, low3, whole) != low3:
        raise InternalConsistencyError("lower central series has not stabilised at step 3")
    der2 = bracket_space(alg, d1, d1)
    der3 = bracket_space(alg, der2, der2)
    return d1, low2, low3, der2, der3


def series_profile(alg: LieAlgebra) -> SeriesProfile:
    return SeriesProfile(*(s.dim for s in series_spaces(alg)))


def center(alg: LieAlgebra) -> Subspace:
    n = alg.dim
    # sum_i x_i c[i][j][k] = 0 for all j, k
    rows = [[alg.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return Subspace(alg, nullspace(Matrix(rows, ncols=n)))


def centralizer(alg: LieAlgebra, x: Sequence) -> Subspace:
    return Subspace(alg, nullspace(alg.ad(x)))


def orthogonal_complement(gram: Matrix, s: Subspace) -> Subspace:
    if s.dim == 0:
        return Subspace.whole(s.parent)
    rows = Matrix(s.basis) @ gram
    return Subspace(s.parent, nullspace(rows))


def is_solvable(alg: LieAlgebra, s: Subspace) -> bool:
    cur = s
    for _ in range(alg.dim + 1):
        if cur.dim == 0:
            return True
        nxt = bracket_space(alg, cur, cur)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return cur.dim == 0


def radical(alg: LieAlgebra) -> Subspace:
    """Solvable radical as the Killing-orthogonal complement of ``[D, D]``."""
    rad = orthogonal_complement(killing_gram(alg), derived_algebra(alg))
    preds = subspace_predicates(alg, rad)
    if not preds["is_ideal"] or not is_solvable(alg, rad):
        raise InternalConsistencyError("Killing-perp of the derived algebra is not a solvable ideal")
    return rad


def levi_complement(alg: LieAlgebra, rad: Subspace, rng: random.Random | None = None) -> Subspace:
    """A subalgebra ``S`` with ``S + rad = alg`` as a direct sum.

    Only abelian radicals are supported.  A complement ``V`` of ``rad`` is
    corrected by a linear map ``phi: V -> rad`` so that ``{v + phi(v)}`` is
    closed; the closure condition is linear in ``phi`` because ``rad`` is an
    abelian ideal.  With ``rng`` the starting complement and the particular
    solution are randomised.
    """
    n = alg.dim
    if rad.dim == 0:
        return Subspace.whole(alg)
    if not subspace_predicates(alg, rad)["is_abelian"]:
        raise UnsupportedCase("levi_complement supports abelian radicals only")
    comp = _complement(alg, rad, rng)
    s, r = len(comp), rad.dim
    frame = Subspace(alg, list(comp) + list(rad.basis))

    unknowns = s * r  # phi[k][m]: coefficient of rad.basis[m] in phi(comp[k])
    rows, rhs = [], []
    for i in range(s):
        for j in range(i + 1, s):
            w = alg.bracket(comp[i], comp[j])
            coords = frame.coordinates(w)
            cv, cn = coords[:s], coords[s:]
            w_n = _combo(rad.basis, cn, n)
            # columns: contribution of each phi[k][m] to the n coordinates
            block = [[Fraction(0)] * unknowns for _ in range(n)]
            for m in range(r):
                bi = alg.bracket(comp[i], rad.basis[m])
                bj = alg.bracket(comp[j], rad.basis[m])
                for t in range(n):
                    block[t][j * r + m] += bi[t]
                    block[t][i * r + m] -= bj[t]
                for k in range(s):
                    if cv[k]:
                        for t in range(n):
                            block[t][k * r + m] -= cv[k] * rad.basis[m][t]
            for t in range(n):
                rows.append(block[t])
                rhs.append(-w_n[t])
    if rows:
        system = Matrix(rows, ncols=unknowns)
        sol = system.solve(rhs)
        if sol is None:
            raise InternalConsistencyError("no Levi complement found for an abelian radical")
        if rng is not None:
            for v in nullspace(system):
                coef = Fraction(rng.randint(-3, 3))
                sol = tuple(a + coef * b for a, b in zip(sol, v))
    else:
        sol = (Fraction(0),) * unknowns
    lifted = []
    for k in range(s):
        phi_k = _combo(rad.basis, sol[k * r:(k + 1) * r], n)
        lifted.append(tuple(a + b for a, b in zip(comp[k], phi_k)))
    out = Subspace(alg, lifted)
    if not subspace_predicates(alg, out)["is_subalgebra"] or out.intersect(rad).dim:
        raise InternalConsistencyError("Levi complement failed verification")
    return out


def _combo(vectors, coeffs, n) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for t in range(n):
                out[t] += c * v[t]
    return tuple(out)


def _complement(alg: LieAlgebra, sub: Subspace, rng) -> list[Vector]:
    n = alg.dim
    chosen = list(sub.basis)
    comp = []
    candidates = alg.basis()
    if rng is not None:
        candidates = [tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)) for _ in range(4 * n)] + candidates
    for v in candidates:
        if Matrix(chosen + [v]).rank() == len(chosen) + 1:
            chosen.append(v)
            comp.append(v)
        if len(chosen) == n:
            break
    return comp
