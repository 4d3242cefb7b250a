"""Isomorphisms of Drinfeld doubles: verification, the proof matrices, and search.

A candidate is a 6x6 matrix ``C`` whose rows express the new basis in the old
one, ``Y'_a = C_a^b Y_b``.  It is an isomorphism from the source double to the
target double when

    C B C^T = B     and     C_a^p C_b^q F_pq^r = F'_ab^c C_c^r,

``F`` being the source constants and ``F'`` the target constants.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import numpy as np

from .catalog import catalog_triple
from .exactmath import ContractViolation, Matrix, format_scalar, to_scalar
from .exactmath import nullspace
from .liecore import InternalConsistencyError, center, killing_gram, radical, series_spaces
from .manin import DoubleAlgebra, ManinTriple, build_double


@dataclass(frozen=True)
class IsoCandidate:
    source: str
    target: str
    matrix: Matrix
    source_params: Mapping[str, Fraction] = field(default_factory=dict)
    target_params: Mapping[str, Fraction] = field(default_factory=dict)
    note: str = ""

    def describe(self) -> str:
        def side(lbl, ps):
            if not ps:
                return lbl
            return lbl + " " + ",".join(f"{k}={format_scalar(v)}" for k, v in sorted(ps.items()))
        return f"{side(self.source, self.source_params)} -> {side(self.target, self.target_params)}"

    def source_triple(self) -> ManinTriple:
        return catalog_triple(self.source, self.source_params)

    def target_triple(self) -> ManinTriple:
        return catalog_triple(self.target, self.target_params)


@dataclass(frozen=True)
class IsoReport:
    valid: bool
    determinant: Fraction
    form_violations: tuple[tuple[int, int], ...] = ()
    bracket_violations: tuple[tuple[int, int, int], ...] = ()
    diagnosis: str = ""

    def __bool__(self):
        return self.valid


def _double(x) -> DoubleAlgebra:
    return x if isinstance(x, DoubleAlgebra) else build_double(x)


def verify_matrix(c: Matrix, source, target) -> IsoReport:
    """Check both isomorphism conditions; indices in the report are 1-based."""
    if c.shape != (6, 6):
        raise ContractViolation(f"isomorphism matrix must be 6x6, got {c.shape}")
    d, dp = _double(source), _double(target)
    det = c.det()
    if det == 0:
        return IsoReport(False, Fraction(0), diagnosis="singular matrix: determinant is zero")
    cb = c @ d.form @ c.T
    form_bad = tuple((a + 1, b + 1) for a in range(6) for b in range(6) if cb[a, b] != dp.form[a, b])
    Fp = dp.algebra.c
    rows = c.rows
    bracket_bad = []
    for a in range(6):
        for b in range(a + 1, 6):
            # left: [Y'_a, Y'_b] written in the old basis
            lhs = d.algebra.bracket(rows[a], rows[b])
            rhs = [sum((Fp[a][b][k] * rows[k][r] for k in range(6)), Fraction(0)) for r in range(6)]
            for r in range(6):
                if lhs[r] != rhs[r]:
                    bracket_bad.append((a + 1, b + 1, r + 1))
    valid = not form_bad and not bracket_bad
    diag = "" if valid else (
        ("form condition fails " if form_bad else "") + ("bracket condition fails" if bracket_bad else "")).strip()
    return IsoReport(valid, det, form_bad, tuple(bracket_bad), diag)


def verify_double_iso(cand: IsoCandidate) -> IsoReport:
    return verify_matrix(cand.matrix, cand.source_triple(), cand.target_triple())


def compose(first: Matrix, second: Matrix) -> Matrix:
    """Witness of ``d -> d''`` from ``first: d -> d'`` and ``second: d' -> d''``."""
    return second @ first


def invert(c: Matrix) -> Matrix:
    return c.inverse()


DUALITY_WITNESS = Matrix([[int(j == (i + 3) % 6) for j in range(6)] for i in range(6)])


# --- the proof matrices ------------------------------------------------------

def _h(x):
    return Fraction(1, 2) * x


def _m(rows) -> Matrix:
    return Matrix([[to_scalar(v) for v in r] for r in rows])


def _c_9_85ii(p):
    b = p["b"]
    return _m([[0, 1, 0, 0, 0, 1 / b],
               [0, 0, 1, 0, -1 / b, 0],
               [1, 0, 0, 0, 0, 0],
               [0, 0, 0, 0, 1, 0],
               [0, 0, 0, 0, 0, 1],
               [0, 0, 0, 1, 0, 0]])


def _c_9_705ii(p):
    b = p["b"]
    return _m([[_h(1), 0, _h(-1), 0, 1 / (2 * b), 0],
               [0, _h(1), 0, -1 / (2 * b), 0, 0],
               [0, 0, 1, 0, 0, 0],
               [0, b, 0, 1, 0, 0],
               [-b, 0, -b, 0, 1, 0],
               [0, b, 0, 0, 0, 1]])


def _c_85i_605iii(p):
    b = p["b"]
    return _m([[0, 0, -b / 2, _h(-1), 0, 0],
               [-b / 2, b / 2, 0, 0, 0, _h(1)],
               [0, -1, 0, 0, 0, 0],
               [-1, -1, 0, 0, 0, -1 / b],
               [0, 0, 1, -1 / b, 0, 0],
               [0, 0, b, 0, -1, 0]])


_C_8_85iii = [[-1, 0, 0, 0, 0, 0], [0, -1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
              [0, 1, 0, -1, 0, 0], [-1, 0, -1, 0, -1, 0], [0, -1, 0, 0, 0, 1]]
_C_8_705i = [[0, 0, 0, 0, -1, 0], [0, 0, 0, 1, 0, 0], [0, 0, 1, 0, 0, 0],
             [0, -1, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 1]]
_C_8_605i = [[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, -1], [1, 0, 0, 0, 0, 0],
             [0, 1, 0, 0, 0, 0], [1, 0, -1, 0, 0, 0], [0, 0, 0, 1, 0, 1]]
_C_8_52ii = [[1, -1, -1, -1, -1, 0], [0, 0, 0, 0, -1, 1], [0, -1, -1, -1, 0, 0],
             [0, 0, 0, 1, -1, 1], [-1, 0, 1, 0, 1, 0], [0, 0, 0, -1, 0, -1]]


def _c_42iii_704(p):
    b = p["b"]
    return _m([[0, 0, 0, 1 / b, 0, 0],
               [0, 0, -1 / (2 * b), 0, 1, 0],
               [0, 1 / (2 * b), 0, 0, 0, 1],
               [b, 0, 0, 0, 0, 0],
               [0, 1, 0, 0, 0, 0],
               [0, 0, 1, 0, 0, 0]])


def _c_42iii_604i(p):
    b = p["b"]
    return _m([[0, 0, 0, -1 / b, 0, 0],
               [0, 0, 1 / (2 * b), 0, 1, 0],
               [0, -1 / (2 * b), 0, 0, 0, 1],
               [-b, 0, 0, 0, 0, 0],
               [0, 1, 0, 0, 0, 0],
               [0, 0, 1, 0, 0, 0]])


def _c_shift(p):
    """``(7_a|1) -> (7_a|2.i)`` and ``(6_a|1) -> (6_a|2)``."""
    a = p["a"]
    return _m([[1, 0, 0, 0, 0, 0],
               [0, 1, 0, 0, 0, 0],
               [0, 0, 1, 0, 0, 0],
               [0, 0, 0, 1, 0, 0],
               [0, 0, -1 / (2 * a), 0, 1, 0],
               [0, 1 / (2 * a), 0, 0, 0, 1]])


def _c_7a_2ii(p):
    a = p["a"]
    return _m([[-1, 0, 0, 0, 0, 0],
               [0, 0, 0, 0, -2 * a, 0],
               [0, 0, 0, 0, 0, 2 * a],
               [0, 0, 0, -1, 0, 0],
               [0, -1 / (2 * a), 0, 0, 0, 1],
               [0, 0, 1 / (2 * a), 0, 1, 0]])


def _c_6a_ii(p):
    a = p["a"]
    k = 1 / (a - 1)
    return _m([[1, 0, 0, 0, 0, 1],
               [0, 0, 1 - a, a - 1, 0, 0],
               [0, 1 - a, 0, 0, 0, 0],
               [0, -1, 1, 0, 0, 0],
               [k, 0, 0, 0, 0, 0],
               [-k, 0, 0, 0, -k, -k]])


def _c_6a_iii(p):
    a = p["a"]
    k = 1 / (a + 1)
    return _m([[1, 0, 0, 0, 0, 1],
               [0, 0, -1 - a, a + 1, 0, 0],
               [0, -1 - a, 0, 0, 0, 0],
               [0, 1, 1, 0, 0, 0],
               [k, 0, 0, 0, 0, 0],
               [k, 0, 0, 0, -k, k]])


_C_5_52i = [[-1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1],
            [0, 0, 0, -1, 0, 0], [0, 1, 0, 0, 0, _h(-1)], [0, 0, 1, 0, _h(1), 0]]
_C_5_601 = [[0, 0, _h(-1), 0, 1, 0], [0, 0, _h(1), 0, 1, 0], [-1, 0, 0, 0, 0, 0],
            [0, _h(1), 0, 0, 0, -1], [0, _h(1), 0, 0, 0, 1], [0, 0, 0, -1, 0, 0]]
_C_5_605ii = [[0, -1, 0, 0, 0, _h(1)], [0, 1, 0, 1, 0, _h(1)], [-1, 0, 1, 0, _h(1), 0],
              [1, 0, 0, 0, -1, 0], [1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1]]
_C_4_42i = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0], [0, 0, _h(-1), 0, 1, 0], [0, _h(1), 0, 0, 0, 1]]
_C_4_42ii = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
             [0, 0, 0, 1, 0, 0], [0, 0, _h(1), 0, 1, 0], [0, _h(-1), 0, 0, 0, 1]]
_C_4_602 = [[0, 0, _h(1), 0, 1, 0], [0, 0, _h(1), 0, -1, 0], [1, 0, 0, 0, 0, 0],
            [0, _h(1), 0, 0, 0, 1], [0, _h(-1), 0, 0, 0, 1], [0, 0, 0, 1, 0, 0]]
_C_4_604ii = [[0, 0, 1, 1, _h(1), 0], [0, 0, -1, 0, _h(1), 0], [-1, 1, 0, 0, 0, _h(1)],
              [1, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, -1], [0, 0, 0, 0, 1, 0]]
_C_3_32 = [[-1, 0, 0, 0, 0, 0], [0, _h(1), _h(-1), 0, 1, 1], [0, _h(-1), _h(1), 0, 1, 1],
           [0, 0, 0, -1, 0, 0], [0, _h(1), 0, 0, 0, -1], [0, _h(1), 0, 0, 0, 1]]
_C_3_33ii = [[1, 0, 0, 0, 0, 2], [0, 1, 0, 0, 0, 0], [0, 0, 1, -2, 0, 0],
             [0, _h(-1), _h(1), 0, 0, 0], [_h(1), 0, 0, 0, 1, 1], [_h(-1), 0, 0, 0, 0, 0]]
_C_3_33iii = [[-1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, -2], [0, 0, 0, 0, -2, 0],
              [0, 0, 0, -1, 1, 1], [_h(-1), 0, _h(-1), 0, 0, 0], [_h(-1), _h(-1), 0, 0, 0, 0]]


def _const(rows):
    return lambda p: _m(rows)


@dataclass(frozen=True)
class ProofMatrix:
    source: str
    target: str
    build: Callable[[Mapping[str, Fraction]], Matrix]
    params: tuple[str, ...] = ()
    # target parameters as a function of the source parameters
    target_params: Callable[[Mapping[str, Fraction]], dict] = lambda p: dict(p)
    note: str = ""


PROOF_MATRICES: tuple[ProofMatrix, ...] = (
    ProofMatrix("(9|5|b)", "(8|5.ii|b)", _c_9_85ii, ("b",)),
    ProofMatrix("(9|5|b)", "(7_0|5.ii|b)", _c_9_705ii, ("b",)),
    ProofMatrix("(8|5.i|b)", "(6_0|5.iii|b)", _c_85i_605iii, ("b",)),
    ProofMatrix("(8|1)", "(8|5.iii)", _const(_C_8_85iii),
                note='listed in the class list as "(8|2.iii)", which has no catalog entry; the matrix lands on (8|5.iii)'),
    ProofMatrix("(8|1)", "(7_0|5.i)", _const(_C_8_705i)),
    ProofMatrix("(8|1)", "(6_0|5.i)", _const(_C_8_605i)),
    ProofMatrix("(8|1)", "(5|2.ii)", _const(_C_8_52ii)),
    ProofMatrix("(4|2.iii|b)", "(7_0|4|b)", _c_42iii_704, ("b",)),
    ProofMatrix("(4|2.iii|b)", "(6_0|4.i|b)", _c_42iii_604i, ("b",), lambda p: {"b": -p["b"]}),
    ProofMatrix("(7_a|1)", "(7_a|2.i)", _c_shift, ("a",)),
    ProofMatrix("(7_a|1)", "(7_a|2.ii)", _c_7a_2ii, ("a",)),
    ProofMatrix("(6_a|1)", "(6_a|2)", _c_shift, ("a",)),
    ProofMatrix("(6_a|1)", "(6_a|6_{1/a}.ii)", _c_6a_ii, ("a",)),
    ProofMatrix("(6_a|1)", "(6_a|6_{1/a}.iii)", _c_6a_iii, ("a",)),
    ProofMatrix("(5|1)", "(5|2.i)", _const(_C_5_52i)),
    ProofMatrix("(5|1)", "(6_0|1)", _const(_C_5_601)),
    ProofMatrix("(5|1)", "(6_0|5.ii)", _const(_C_5_605ii)),
    ProofMatrix("(4|1)", "(4|2.i)", _const(_C_4_42i)),
    ProofMatrix("(4|1)", "(4|2.ii)", _const(_C_4_42ii)),
    ProofMatrix("(4|1)", "(6_0|2)", _const(_C_4_602)),
    ProofMatrix("(4|1)", "(6_0|4.ii)", _const(_C_4_604ii)),
    ProofMatrix("(3|1)", "(3|2)", _const(_C_3_32)),
    ProofMatrix("(3|1)", "(3|3.ii)", _const(_C_3_33ii)),
    ProofMatrix("(3|1)", "(3|3.iii)", _const(_C_3_33iii)),
)


def proof_matrix(source: str, target: str) -> ProofMatrix:
    key = (source.replace(" ", ""), target.replace(" ", ""))
    for pm in PROOF_MATRICES:
        if (pm.source, pm.target) == key:
            return pm
    raise ContractViolation(f"no proof matrix for {source} -> {target}")


def catalog_iso(source: str, target: str, params: Mapping | None = None) -> IsoCandidate:
    """The displayed proof matrix ``source -> target`` with parameters substituted."""
    pm = proof_matrix(source, target)
    p = {k: to_scalar(v) for k, v in (params or {}).items() if k in pm.params}
    missing = [k for k in pm.params if k not in p]
    if missing:
        raise ContractViolation(f"{source} -> {target} needs parameter(s) {', '.join(missing)}")
    return IsoCandidate(pm.source, pm.target, pm.build(p), p, pm.target_params(p) if pm.params else {}, pm.note)


# --- bounded search ------------------------------------------------------------

DEFAULT_VALUES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                  Fraction(1, 2), Fraction(-1, 2))


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found", "non-isomorphic" or "inconclusive"
    witness: Matrix | None = None
    reason: str = ""
    nodes: int = 0


def _lcm_den(xs) -> int:
    out = 1
    for x in xs:
        d = Fraction(x).denominator
        out = out * d // math.gcd(out, d)
    return out


class _Scaled:
    """Integer images of a double's constants and Killing form."""

    def __init__(self, d: DoubleAlgebra):
        self.s = _lcm_den(x for p in d.algebra.c for r in p for x in r)
        self.c = np.array([[[int(x * self.s) for x in r] for r in p] for p in d.algebra.c], dtype=np.int64)
        self.k_frac = killing_gram(d.algebra)
        self.sk = _lcm_den(x for r in self.k_frac.rows for x in r)
        self.k = np.array([[int(x * self.sk) for x in r] for r in self.k_frac.rows], dtype=np.int64)
        self.form = np.array([[int(x) for x in r] for r in d.form.rows], dtype=np.int64)


def _annihilator(basis, n: int = 6) -> np.ndarray:
    """Integer rows whose common kernel is the span of ``basis``."""
    if not basis:
        return np.eye(n, dtype=np.int64)
    rows = nullspace(Matrix(basis))
    out = [[int(x * _lcm_den(v)) for x in v] for v in rows]
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def _characteristic_subspaces(alg) -> list:
    return [center(alg), radical(alg), *series_spaces(alg)]


def _power_traces(mats: np.ndarray, k: int = 6) -> np.ndarray:
    out = []
    p = mats
    for i in range(k):
        out.append(np.trace(p, axis1=-2, axis2=-1))
        if i + 1 < k:
            p = p @ mats
    return np.stack(out, axis=-1)


def _candidate_rows(values: Sequence[Fraction], scale: int) -> np.ndarray:
    """All nonzero isotropic vectors with entries in ``values`` (scaled to integers)."""
    iv = np.array([int(v * scale) for v in values], dtype=np.int64)
    half = np.array(list(itertools.product(iv, repeat=3)), dtype=np.int64)
    xi, yi = np.nonzero(half @ half.T == 0)
    cand = np.concatenate([half[xi], half[yi]], axis=1)
    return cand[np.any(cand != 0, axis=1)]


def search_iso(source, target, budget: int = 200_000, values: Sequence = DEFAULT_VALUES,
               certify: bool = True) -> SearchResult:
    """Backtracking search for ``C`` with entries drawn from ``values``.

    Non-isomorphism is asserted only from differing invariants; an exhausted
    or over-budget search is inconclusive.
    """
    if budget <= 0:
        raise ContractViolation("search budget must be positive")
    d, dp = _double(source), _double(target)
    if certify:
        from .invariants import first_difference, invariant_profile
        diff = first_difference(invariant_profile(d), invariant_profile(dp))
        if diff is not None:
            return SearchResult("non-isomorphic", reason=f"invariants differ: {diff}")
    vals = sorted({to_scalar(v) for v in values})
    L = _lcm_den(vals)
    src, tgt = _Scaled(d), _Scaled(dp)
    S, Sp = src.s, tgt.s
    cand = _candidate_rows(vals, L)

    # an isomorphism maps each characteristic subspace onto its counterpart
    masks = [np.ones(len(cand), dtype=bool) for _ in range(6)]
    for ws, wt in zip(_characteristic_subspaces(d.algebra), _characteristic_subspaces(dp.algebra)):
        if ws.dim != wt.dim:
            return SearchResult("non-isomorphic", reason="characteristic subspace dimensions differ")
        inside = np.all(cand @ _annihilator(list(ws.basis)).T == 0, axis=1)
        for a in range(6):
            unit = tuple(Fraction(int(i == a)) for i in range(6))
            masks[a] &= inside if wt.contains(unit) else ~inside

    # Killing norm and the spectrum of ad, via power traces
    knorm = np.einsum("ni,ij,nj->n", cand, src.k, cand)
    big = np.abs(cand).max(initial=0) * np.abs(src.c).max(initial=0) * 6
    ads = np.einsum("ni,ijk->nkj", cand, src.c)
    traces = _power_traces(ads.astype(object) if big ** 6 > 2 ** 55 else ads)
    ttr = _power_traces(np.einsum("ai,ijk->akj", np.eye(6, dtype=np.int64), tgt.c).astype(object))
    pools = []
    for a in range(6):
        kk = L * L * src.sk * tgt.k_frac[a, a]
        mask = masks[a] & (knorm == int(kk)) if kk.denominator == 1 else np.zeros(len(cand), dtype=bool)
        for k in range(6):
            mask &= traces[:, k] * Sp ** (k + 1) == ttr[a, k] * (L * S) ** (k + 1)
        pools.append(cand[mask])
    if any(len(p) == 0 for p in pools):
        return SearchResult("inconclusive", reason="some basis vector has no candidate image in the value set")

    rhs_idx = [[[c for c in range(6) if tgt.c[p][q][c]] for q in range(6)] for p in range(6)]
    pair_k = [[L * L * src.sk * tgt.k_frac[a, b] for b in range(6)] for a in range(6)]
    assigned: dict[int, np.ndarray] = {}
    nodes = 0

    def feasible(b: int) -> np.ndarray:
        pool = pools[b]
        mask = np.ones(len(pool), dtype=bool)
        for a, ra in assigned.items():
            if pair_k[a][b].denominator != 1:
                return pool[:0]
            mask &= pool @ (src.form @ ra) == L * L * int(dp.form[a, b])
            mask &= pool @ (src.k @ ra) == int(pair_k[a][b])
        known = set(assigned) | {b}
        for p in range(6):
            for q in range(p + 1, 6):
                involved = {p, q, *rhs_idx[p][q]}
                if b not in involved or not involved <= known:
                    continue
                if p == b:
                    lhs = pool @ np.einsum("j,ijk->ik", assigned[q], src.c)
                elif q == b:
                    lhs = pool @ np.einsum("i,ijk->jk", assigned[p], src.c)
                else:
                    lhs = np.einsum("i,j,ijk->k", assigned[p], assigned[q], src.c)[None, :]
                rhs = np.zeros((len(pool), 6), dtype=np.int64)
                for c in rhs_idx[p][q]:
                    rhs = rhs + tgt.c[p][q][c] * (pool if c == b else assigned[c][None, :])
                mask &= np.all(lhs * Sp == rhs * (L * S), axis=1)
        return pool[mask]

    def recurse() -> bool:
        nonlocal nodes
        free = [b for b in range(6) if b not in assigned]
        if not free:
            return True
        options = min(((feasible(b), b) for b in free), key=lambda t: (len(t[0]), t[1]))
        pool, b = options
        for row in pool:
            nodes += 1
            if nodes > budget:
                return False
            assigned[b] = row
            if recurse():
                return True
            del assigned[b]
        return False

    if recurse():
        c = Matrix([[Fraction(int(x), L) for x in assigned[a]] for a in range(6)])
        if not verify_matrix(c, d, dp).valid:
            raise InternalConsistencyError("search produced a witness that fails verification")
        return SearchResult("found", c, "witness verified", nodes)
    return SearchResult("inconclusive", reason="budget exhausted" if nodes > budget else "value set exhausted",
                        nodes=nodes)


# --- classification theorem ---------------------------------------------------------


@dataclass(frozen=True)
class TheoremClass:
    item: int
    listed: tuple[str, ...]  # labels as given in the class list
    domain: str = ""


THEOREM_CLASSES: tuple[TheoremClass, ...] = (
    TheoremClass(1, ("(9|5|b)", "(8|5.ii|b)", "(7_0|5.ii|b)"), "b > 0"),
    TheoremClass(2, ("(8|5.i|b)", "(6_0|5.iii|b)"), "b > 0"),
    TheoremClass(3, ("(7_a|7_{1/a}|b)", "(7_{1/a}|7_a|b)"), "a >= 1, b != 0"),
    TheoremClass(4, ("(6_a|6_{1/a}.i|b)", "(6_{1/a}.i|6_a|b)"), "a > 1, b != 0"),
    TheoremClass(5, ("(9|1)",)),
    TheoremClass(6, ("(8|1)", "(8|2.iii)", "(7_0|5.i)", "(6_0|5.i)", "(5|2.ii)")),
    TheoremClass(7, ("(7_0|4|b)", "(4|2.iii|b)", "(6_0|4.i|-b)"), "b != 0"),
    TheoremClass(8, ("(3|3.i)",)),
    TheoremClass(9, ("(7_a|1)", "(7_a|2.i)", "(7_a|2.ii)"), "a > 1"),
    TheoremClass(10, ("(6_a|1)", "(6_a|2)", "(6_a|6_{1/a}.ii)", "(6_a|6_{1/a}.iii)"), "a > 1"),
    TheoremClass(11, ("(6_0|1)", "(6_0|5.ii)", "(5|1)", "(5|2.i)")),
    TheoremClass(12, ("(6_0|2)", "(6_0|4.ii)", "(4|1)", "(4|2.i)", "(4|2.ii)")),
    TheoremClass(13, ("(3|1)", "(3|2)", "(3|3.ii)", "(3|3.iii)")),
    TheoremClass(14, ("(7_a|1)", "(7_a|2.i)", "(7_a|2.ii)"), "0 < a < 1"),
    TheoremClass(15, ("(7_0|1)",)),
    TheoremClass(16, ("(7_0|2.i)",)),
    TheoremClass(17, ("(7_0|2.ii)",)),
    TheoremClass(18, ("(7_1|1)", "(7_1|2.i)", "(7_1|2.ii)")),
    TheoremClass(19, ("(2|1)",)),
    TheoremClass(20, ("(2|2.i)",)),
    TheoremClass(21, ("(2|2.ii)",)),
    TheoremClass(22, ("(1|1)",)),
)

_FIXED_ITEMS = {
    "(9|1)": 5, "(8|1)": 6, "(7_0|5.i)": 6, "(6_0|5.i)": 6, "(5|2.ii)": 6,
    "(6_0|1)": 11, "(6_0|5.ii)": 11, "(5|1)": 11, "(5|2.i)": 11,
    "(6_0|2)": 12, "(6_0|4.ii)": 12, "(4|1)": 12, "(4|2.i)": 12, "(4|2.ii)": 12,
    "(3|1)": 13, "(3|2)": 13, "(3|3.ii)": 13, "(3|3.iii)": 13,
    "(7_0|1)": 15, "(7_0|2.i)": 16, "(7_0|2.ii)": 17,
    "(2|1)": 19, "(2|2.i)": 20, "(2|2.ii)": 21, "(1|1)": 22,
}


def expected_class(label: str, params: Mapping | None = None) -> tuple[int, dict] | None:
    """Class item and class parameters the list assigns to a catalog triple.

    Labels may be duals.  Grid values outside a class's stated domain (``a < 1``
    where the list asks for ``a > 1``) are mapped to the reciprocal, the
    instance they are isomorphic to; the pipeline then has to find a witness.
    Returns ``None`` for triples the list does not mention.
    """
    from .catalog import BY_LABEL
    from .manin import dual_label

    p = {k: to_scalar(v) for k, v in (params or {}).items()}
    primary = label if label in BY_LABEL else dual_label(label)
    a, b = p.get("a"), p.get("b")
    if primary in _FIXED_ITEMS:
        return _FIXED_ITEMS[primary], {}
    if primary in ("(9|5|b)", "(8|5.ii|b)", "(7_0|5.ii|b)"):
        return 1, {"b": b}
    if primary in ("(8|5.i|b)", "(6_0|5.iii|b)"):
        return 2, {"b": b}
    if primary == "(7_a|7_{1/a}|b)":
        return 3, {"a": max(a, 1 / a), "b": b}
    if primary == "(6_a|6_{1/a}.i|b)":
        return 4, {"a": max(a, 1 / a), "b": b}
    if primary in ("(7_0|4|b)", "(4|2.iii|b)"):
        return 7, {"b": b}
    if primary == "(6_0|4.i|b)":
        return 7, {"b": -b}
    if primary == "(3|3.i)":
        return 8, {"b": b}  # the list carries no parameter here; see verify_theorem
    if primary in ("(7_a|1)", "(7_a|2.i)", "(7_a|2.ii)"):
        if a > 1:
            return 9, {"a": a}
        if a < 1:
            return 14, {"a": a}
        return 18, {}
    if primary in ("(6_a|1)", "(6_a|2)", "(6_a|6_{1/a}.ii)", "(6_a|6_{1/a}.iii)"):
        return 10, {"a": max(a, 1 / a)}
    return None


def _params_text(p: Mapping) -> str:
    return ",".join(f"{k}={format_scalar(v)}" for k, v in sorted(p.items()))


@dataclass
class Node:
    label: str
    params: dict
    triple: ManinTriple
    profile: object = None
    expected: tuple | None = None

    @property
    def key(self) -> tuple:
        return (self.label, tuple(sorted(self.params.items())))

    @property
    def display(self) -> str:
        return f"{self.label} {_params_text(self.params)}".strip()


@dataclass
class ClassInstance:
    """One isomorphism class of doubles: an instance of a listed class at fixed parameters."""

    params: dict
    members: list[Node]
    witnesses: list[tuple[IsoCandidate, str]]  # (candidate, provenance)

    @property
    def profile(self):
        return self.members[0].profile


@dataclass
class ReportClass:
    item: int
    listed: tuple[str, ...]
    domain: str
    instances: list[ClassInstance] = field(default_factory=list)

    def member_labels(self) -> list[str]:
        seen = []
        for inst in self.instances:
            for n in inst.members:
                if n.label not in seen:
                    seen.append(n.label)
        return seen


@dataclass
class ClassificationReport:
    classes: list[ReportClass]
    separations: list[tuple[int, int, str]]  # between representatives of distinct classes
    instance_separations: list[tuple[int, str, str, str]]  # item, params, params, invariant
    annotations: list[str]
    failures: list[str]
    triples: int
    edges_verified: int
    searches: list[tuple[str, str, str]]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return len(self.classes) == 22 and not self.failures


def _profile_task(args):
    from .invariants import invariant_profile
    label, params = args
    return invariant_profile(catalog_triple(label, params))


class _Forest:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        self.parent[max(ri, rj)] = min(ri, rj)
        return True


def verify_theorem(grid: Mapping | None = None, jobs: int = 1, budget: int = 200_000) -> ClassificationReport:
    """Reproduce the 22-class list on a parameter grid.

    Triples are grouped by equal invariant profiles.  Inside each group every
    pair gets a verified witness, built from the proof matrices, the duality
    relabeling and their composites, with bounded search bridging whatever is
    left.  Distinct groups are separated by the first differing invariant.
    """
    import time

    from .catalog import catalog_on_grid
    from .invariants import TABLE1_UNMATCHED, first_difference

    start = time.perf_counter()
    triples = catalog_on_grid(grid)
    nodes = [Node(t.label, dict(t.params), t) for t in triples]
    tasks = [(n.label, n.params) for n in nodes]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            profiles = list(ex.map(_profile_task, tasks, chunksize=8))
    else:
        profiles = [_profile_task(t) for t in tasks]
    for n, prof in zip(nodes, profiles):
        n.profile = prof
        n.expected = expected_class(n.label, n.params)
    index = {n.key: i for i, n in enumerate(nodes)}

    groups: dict[tuple, list[int]] = {}
    for i, n in enumerate(nodes):
        groups.setdefault(tuple(n.profile.separating().values()), []).append(i)
    group_of = {i: g for g, members in enumerate(groups.values()) for i in members}
    group_list = list(groups.values())

    failures: list[str] = []
    annotations: list[str] = []
    searches: list[tuple[str, str, str]] = []
    edges: dict[int, list[tuple[int, Matrix, str]]] = {i: [] for i in range(len(nodes))}
    forest = _Forest(len(nodes))
    verified = 0

    def add_edge(i, j, c, how):
        nonlocal verified
        rep = verify_matrix(c, nodes[i].triple, nodes[j].triple)
        verified += 1
        if not rep.valid:
            failures.append(f"{how} witness {nodes[i].display} -> {nodes[j].display} fails: {rep.diagnosis}")
            return
        if group_of[i] != group_of[j]:
            diff = first_difference(nodes[i].profile, nodes[j].profile)
            raise InternalConsistencyError(f"verified isomorphism joins profiles that differ in {diff}")
        edges[i].append((j, c, how))
        edges[j].append((i, invert(c), how))
        forest.union(i, j)

    from .manin import dual_label
    for i, n in enumerate(nodes):
        j = index.get((dual_label(n.label), tuple(sorted(n.params.items()))))
        if j is not None and i < j:
            add_edge(i, j, DUALITY_WITNESS, "duality")
    for pm in PROOF_MATRICES:
        for i, n in enumerate(nodes):
            if n.label != pm.source:
                continue
            tp = pm.target_params(n.params) if pm.params else {}
            j = index.get((pm.target, tuple(sorted(tp.items()))))
            if j is not None:
                add_edge(i, j, pm.build(n.params), "proof matrix")

    for members in group_list:
        roots = sorted({forest.find(i) for i in members})
        base = roots[0]
        for r in roots[1:]:
            if forest.find(r) == forest.find(base):
                continue
            res = search_iso(nodes[base].triple, nodes[r].triple, budget=budget, certify=False)
            searches.append((nodes[base].display, nodes[r].display, res.status))
            if res.status == "found":
                add_edge(base, r, res.witness, "search")
            else:
                failures.append(f"no witness between {nodes[base].display} and {nodes[r].display}: {res.reason}")

    # witnesses for every pair inside a group, composed along a spanning tree
    instances: list[ClassInstance] = []
    for members in group_list:
        root = members[0]
        path = {root: (Matrix.identity(6), "identity")}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v, c, how in edges[u]:
                if v not in path:
                    m, prov = path[u]
                    path[v] = (compose(m, c), how if prov == "identity" else "composite")
                    queue.append(v)
        wits = []
        for x, u in enumerate(members):
            for v in members[x + 1:]:
                if u not in path or v not in path:
                    continue
                c = compose(invert(path[u][0]), path[v][0])
                direct = next((h for w, _, h in edges[u] if w == v), None)
                rep = verify_matrix(c, nodes[u].triple, nodes[v].triple)
                verified += 1
                if not rep.valid:
                    failures.append(f"composed witness {nodes[u].display} -> {nodes[v].display} fails")
                cand = IsoCandidate(nodes[u].label, nodes[v].label, c, nodes[u].params, nodes[v].params)
                wits.append((cand, direct or "composite"))
        expected = {nodes[i].expected[0] for i in members if nodes[i].expected}
        cparams = [nodes[i].expected[1] for i in members if nodes[i].expected]
        params = cparams[0] if cparams else {}
        instances.append(ClassInstance(dict(params), [nodes[i] for i in members], wits))
        if len(expected) != 1:
            names = ", ".join(nodes[i].display for i in members)
            failures.append(f"profile group {{{names}}} matches classes {sorted(expected)}")
        elif any(c != params for c in cparams):
            failures.append(f"class {expected.pop()} instance mixes parameters {cparams}")

    classes = [ReportClass(tc.item, tc.listed, tc.domain) for tc in THEOREM_CLASSES]
    by_item = {c.item: c for c in classes}
    for inst in instances:
        items = {n.expected[0] for n in inst.members if n.expected}
        if len(items) == 1:
            by_item[items.pop()].instances.append(inst)
    for c in classes:
        c.instances.sort(key=lambda inst: tuple(sorted(inst.params.items())))
        if not c.instances:
            failures.append(f"class {c.item} has no triple on the grid")

    # separation between classes (first instances) and between instances of a class
    separations = []
    for x, c1 in enumerate(classes):
        for c2 in classes[x + 1:]:
            if not c1.instances or not c2.instances:
                continue
            for i1 in c1.instances:
                for i2 in c2.instances:
                    diff = first_difference(i1.profile, i2.profile)
                    if diff is None:
                        failures.append(f"classes {c1.item} and {c2.item} are not separated")
            diff = first_difference(c1.instances[0].profile, c2.instances[0].profile)
            separations.append((c1.item, c2.item, diff))
    instance_seps = []
    for c in classes:
        for x, i1 in enumerate(c.instances):
            for i2 in c.instances[x + 1:]:
                diff = first_difference(i1.profile, i2.profile)
                instance_seps.append((c.item, _params_text(i1.params), _params_text(i2.params), diff))
    for c in classes:
        if not c.domain and len(c.instances) > 1:
            for item, p1, p2, diff in instance_seps:
                if item == c.item:
                    annotations.append(f"class {c.item} is listed without a parameter, but its instances {p1} and {p2} "
                                       f"are separated by {diff}")

    for inst in instances:
        for n in inst.members:
            if n.expected is None:
                items = {m.expected[0] for m in inst.members if m.expected}
                where = f"class {min(items)}" if items else "no listed class"
                annotations.append(f"{n.display} is not in the class list; its profile and witnesses place it in {where}")
            elif n.expected[0] in (3, 4, 10) and n.params["a"] < 1:
                annotations.append(
                    f"{n.display} lies outside the stated domain of class {n.expected[0]}; "
                    f"it is witnessed isomorphic to the instance {_params_text(n.expected[1])}")
    listed_missing = [lbl for tc in THEOREM_CLASSES for lbl in tc.listed if lbl in TABLE1_UNMATCHED]
    for lbl in listed_missing:
        annotations.append(f"{lbl} is listed but has no catalog entry; the nearest match is {TABLE1_UNMATCHED[lbl]}")
    annotations.append(
        f'the invariant table has a row "(2|2)" with no catalog entry; its row matches the computed profile of '
        f'{TABLE1_UNMATCHED["(2|2)"]}')
    annotations = list(dict.fromkeys(annotations))
    return ClassificationReport(classes, separations, instance_seps, annotations, failures, len(nodes), verified,
                                searches, time.perf_counter() - start)
