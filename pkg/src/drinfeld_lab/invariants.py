"""Isomorphism invariants of Drinfeld doubles.

Besides the Killing signature and the series dimensions, the refined
invariants are computed only where they make sense; elsewhere the profile
carries a :class:`NotApplicable` marker with the reason.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bianchi import BianchiLabel, bianchi_classify
from .exactmath import ContractViolation, Matrix, Polynomial, char_poly, format_scalar, signature
from .liecore import (
    InternalConsistencyError,
    LieAlgebra,
    SeriesProfile,
    Subspace,
    UnsupportedCase,
    center,
    form_on,
    format_vector,
    killing_gram,
    levi_complement,
    radical,
    series_profile,
    series_spaces,
    subspace_predicates,
)
from .manin import DoubleAlgebra, build_double


class NotApplicableError(ValueError):
    """An invariant was requested outside the cases where it is defined."""


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __str__(self):
        return f"n/a ({self.reason})"

    def __bool__(self):
        return False


def _as_double(x) -> DoubleAlgebra:
    return x if isinstance(x, DoubleAlgebra) else build_double(x)


# --- semisimple split coefficients ---------------------------------------------


@dataclass(frozen=True)
class SplitInvariant:
    """``q(l) = l^2 - s l + p`` whose roots are the unordered pair ``{alpha, beta}``."""

    s: Fraction
    p: Fraction

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial([self.p, -self.s, 1])

    @property
    def discriminant(self) -> Fraction:
        return self.s * self.s - 4 * self.p

    def __str__(self):
        mid = f" {_signed(-self.s)}*l" if self.s else ""
        return f"l^2{mid} {_signed(self.p)}"


def _signed(x: Fraction) -> str:
    return f"- {format_scalar(-x)}" if x < 0 else f"+ {format_scalar(x)}"


def semisimple_split_coeffs(d) -> SplitInvariant:
    d = _as_double(d)
    k = killing_gram(d.algebra)
    if k.det() == 0:
        raise NotApplicableError("Killing form is degenerate; the double is not semisimple")
    cp = char_poly(k.inverse() @ d.form)
    q = cp.exact_root(3)
    if q is None:
        raise InternalConsistencyError(f"char poly of K^-1 B is not a cube: {cp}")
    return SplitInvariant(-q.coeffs[1], q.coeffs[0])


# --- Levi restriction ------------------------------------------------------------


@dataclass(frozen=True)
class LeviRestrictionClass:
    tag: str  # "isotropic" or "proportional"
    ratio: Fraction | None = None

    def __str__(self):
        return "isotropic" if self.tag == "isotropic" else f"B|S = {format_scalar(self.ratio)}*K_S"


def _restriction_class(d: DoubleAlgebra, s: Subspace) -> LeviRestrictionClass:
    bs = form_on(d.form, s)
    if bs.is_zero():
        return LeviRestrictionClass("isotropic")
    ks = killing_gram(d.algebra.restrict(s))
    ratio = None
    for i in range(s.dim):
        for j in range(s.dim):
            if ks[i, j] != 0:
                ratio = bs[i, j] / ks[i, j]
                break
        if ratio is not None:
            break
    if ratio is None or bs != ks.scale(ratio):
        raise InternalConsistencyError("form on the Levi factor is neither zero nor proportional to its Killing form")
    return LeviRestrictionClass("proportional", ratio)


def levi_restriction_class(d, lifts: int = 3, seed: int = 0) -> LeviRestrictionClass:
    """Restriction of the pairing to a Levi factor, checked over several random lifts."""
    d = _as_double(d)
    alg = d.algebra
    rad = radical(alg)
    if rad.dim == 0:
        raise NotApplicableError("double is semisimple")
    if rad.dim == alg.dim:
        raise NotApplicableError("double is solvable")
    if not subspace_predicates(alg, rad)["is_abelian"]:
        raise NotApplicableError("radical is not abelian")
    rng = random.Random(seed)
    results = {_restriction_class(d, levi_complement(alg, rad))}
    for _ in range(max(lifts, 1) - 1):
        results.add(_restriction_class(d, levi_complement(alg, rad, rng)))
    if len(results) != 1:
        raise InternalConsistencyError(f"Levi restriction depends on the lift: {results}")
    return results.pop()


# --- center ------------------------------------------------------------------------


def center_form_signature(d) -> tuple[int, int, int]:
    d = _as_double(d)
    z = center(d.algebra)
    if z.dim == 0:
        return (0, 0, 0)
    return signature(form_on(d.form, z))


# --- the quotient D1/Z -------------------------------------------------------------


@dataclass(frozen=True)
class QuotientData:
    """``ad x`` on ``V = [D,D]/Z`` for an ``x`` outside ``[D,D]``."""

    x: tuple
    z: Subspace
    d1: Subspace
    w: tuple  # complement of Z in D1, a basis of V
    t: Matrix  # ad x on V in the basis w
    g: Matrix  # pairing on V


def quotient_data(d) -> QuotientData:
    d = _as_double(d)
    alg = d.algebra
    z = center(alg)
    d1 = series_spaces(alg)[0]
    if z.dim != 1 or d1.dim != alg.dim - 1 or not d1.contains_subspace(z):
        raise NotApplicableError("needs dim Z = 1, dim [D,D] = 5 and Z inside [D,D]")
    x = next(e for e in alg.basis() if not d1.contains(e))
    zv = z.basis[0]
    w = list(d1.basis)
    # drop one vector of the D1 basis so the rest complements Z
    comp = None
    for i in range(len(w)):
        rest = w[:i] + w[i + 1:]
        if Subspace.span(alg, rest + [zv]).dim == d1.dim:
            comp = rest
            break
    assert comp is not None
    basis = Subspace(alg, comp + [zv])
    cols = []
    for v in comp:
        coords = basis.coordinates(alg.bracket(x, v))
        cols.append(coords[:-1])
    t = Matrix.from_columns(cols)
    g = Matrix([[d.pairing(u, v) for v in comp] for u in comp])
    return QuotientData(tuple(x), z, d1, tuple(comp), t, g)


@dataclass(frozen=True)
class QuotientSpectrum:
    """Char poly ``l^4 + c2 l^2 + c4`` of ``ad x`` on ``[D,D]/Z``, up to rescaling ``x``.

    Stored as ``(sign c2, c4 / c2^2)``, or ``(0, sign c4)`` when ``c2 = 0``.
    """

    sign: int
    ratio: Fraction

    def __str__(self):
        return f"({self.sign:+d}, {format_scalar(self.ratio)})"


def quotient_spectrum(d) -> QuotientSpectrum:
    q = quotient_data(d)
    cp = char_poly(q.t)
    c = cp.coeffs  # lowest degree first: c4, c3, c2, c1, 1
    if c[1] != 0 or c[3] != 0:
        raise InternalConsistencyError("ad x on [D,D]/Z should have an even characteristic polynomial")
    c2, c4 = c[2], c[0]
    if c2 != 0:
        return QuotientSpectrum(1 if c2 > 0 else -1, c4 / (c2 * c2))
    return QuotientSpectrum(0, Fraction((c4 > 0) - (c4 < 0)))


def _poly_at(p: Polynomial, m: Matrix) -> Matrix:
    n = m.shape[0]
    out = Matrix.zeros(n)
    for coeff in reversed(p.coeffs):
        out = out @ m + Matrix.identity(n).scale(coeff)
    return out


def jordan_chevalley(t: Matrix) -> tuple[Matrix, Matrix]:
    """Semisimple and nilpotent parts ``t = s + n`` over the rationals (Newton iteration)."""
    chi = char_poly(t)
    p = chi // chi.gcd(chi.derivative())
    dp = p.derivative()
    s = t
    for _ in range(t.shape[0] + 2):
        ps = _poly_at(p, s)
        if ps.is_zero():
            return s, t - s
        s = s - ps @ _poly_at(dp, s).inverse()
    raise InternalConsistencyError("Jordan-Chevalley iteration did not converge")


def quotient_form_signature(d) -> tuple[int, int, int]:
    """Signature of ``h(u, v) = g(u, S^-1 N v)`` on ``[D,D]/Z``.

    ``S + N`` is the Jordan-Chevalley decomposition of ``ad x`` there.  The
    form does not depend on the choice or scaling of ``x`` as long as
    ``[[D,D],[D,D]]`` lies in the center.
    """
    d = _as_double(d)
    q = quotient_data(d)
    d2 = series_spaces(d.algebra)[3]
    if not q.z.contains_subspace(d2):
        raise NotApplicableError("[[D,D],[D,D]] is not central")
    s, n = jordan_chevalley(q.t)
    if s.det() == 0:
        raise NotApplicableError("ad x is not invertible on [D,D]/Z")
    h = q.g @ s.inverse() @ n
    if not h.is_symmetric():
        raise InternalConsistencyError("quotient nilpotent form is not symmetric")
    return signature(h)


# --- maximal isotropic abelian subalgebras ---------------------------------------------


@dataclass(frozen=True)
class MIAFamily:
    """A subalgebra ``span{z, v0 + alpha*v1, w0 + alpha*w1}`` or a fixed one.

    ``alpha`` is ``"all"`` for a free parameter, a rational for an isolated
    member, or ``None`` for an irrational member (``note`` holds the
    discriminant).
    """

    form: int
    vectors: tuple  # ((v0, v1), ...) for the non-central vectors
    z: tuple
    alpha: object = None
    note: str = ""
    dual_exists: bool | None = None
    dual_type: BianchiLabel | None = None
    dual_basis: tuple = ()

    @property
    def parametric(self) -> bool:
        return self.alpha == "all"

    def member(self, alpha=None) -> list[tuple]:
        a = self.alpha if alpha is None else alpha
        if a == "all" or a is None:
            a = Fraction(1) if a == "all" else a
            if a is None:
                raise ContractViolation("irrational family member has no rational basis")
        return [self.z] + [tuple(x + a * y for x, y in zip(v0, v1)) for v0, v1 in self.vectors]

    def describe(self, labels: Sequence[str]) -> str:
        parts = [format_vector(self.z, labels)]
        for v0, v1 in self.vectors:
            if self.alpha == "all":
                base = format_vector(v0, labels)
                if any(v1):
                    var = format_vector(v1, labels)
                    parts.append(f"{base} + alpha*({var})" if base != "0" else f"alpha*({var})")
                else:
                    parts.append(base)
            elif self.alpha is None:
                parts.append(f"{format_vector(v0, labels)} + alpha*({format_vector(v1, labels)})")
            else:
                parts.append(format_vector(tuple(x + self.alpha * y for x, y in zip(v0, v1)), labels))
        text = "span{" + ", ".join(parts) + "}"
        if self.alpha == "all":
            text += ", alpha free"
        elif self.alpha is None:
            text += f" ({self.note})"
        return text


@dataclass(frozen=True)
class MIACensus:
    families: tuple[MIAFamily, ...]
    complete: bool
    rulings: tuple[str, str] = ("", "")
    note: str = ""

    @property
    def count(self) -> int:
        return len(self.families)

    def summary(self) -> str:
        if not self.complete:
            return f"incomplete ({self.note})"
        return f"{self.count} families; rulings {self.rulings[0]}/{self.rulings[1]}"


def _hyperbolic_basis(d: DoubleAlgebra, w: Sequence[tuple]):
    """Isotropic ``u1, u2, v1, v2`` spanning ``w`` with ``<u_i, v_j> = delta_ij``."""
    pair = d.pairing
    vecs = [tuple(v) for v in w]

    def isotropic_in(space):
        for v in space:
            if pair(v, v) == 0:
                return v
        for a in space:
            for b in space:
                for c in (1, -1, 2, -2, Fraction(1, 2)):
                    v = tuple(x + c * y for x, y in zip(a, b))
                    if any(v) and pair(v, v) == 0:
                        return v
        return None

    out_u, out_v = [], []
    space = vecs
    for _ in range(2):
        u = isotropic_in(space)
        if u is None:
            return None
        partner = next((v for v in space if pair(u, v) != 0), None)
        if partner is None:
            return None
        v = tuple(x / pair(u, partner) for x in partner)
        v = tuple(x - pair(v, v) / 2 * y for x, y in zip(v, u))
        out_u.append(u)
        out_v.append(v)
        # project the rest onto the orthogonal complement of span{u, v}
        rest = []
        for s in space:
            t = tuple(si - pair(s, v) * ui - pair(s, u) * vi for si, ui, vi in zip(s, u, v))
            rest.append(t)
        basis = []
        for t in rest:
            if any(t) and Matrix(basis + [t]).rank() > len(basis):
                basis.append(t)
        space = basis
    return out_u[0], out_u[1], out_v[0], out_v[1]


def _abelian_conditions(alg: LieAlgebra, p0, p1, q0, q1) -> list[Polynomial]:
    """Components of ``[p0 + a p1, q0 + a q1]`` as polynomials in ``a``."""
    c0 = alg.bracket(p0, q0)
    c1 = [x + y for x, y in zip(alg.bracket(p0, q1), alg.bracket(p1, q0))]
    c2 = alg.bracket(p1, q1)
    return [Polynomial([c0[k], c1[k], c2[k]]) for k in range(alg.dim)]


def _solve_family(conds: list[Polynomial]):
    """``"all"``, or (rational roots, number of real roots, discriminant note)."""
    g = Polynomial([])
    for c in conds:
        g = g.gcd(c) if not g.is_zero() else (c.monic() if not c.is_zero() else c)
    if g.is_zero():
        return "all"
    if g.degree == 0:
        return [], 0, ""
    roots = g.rational_roots()
    real = g.real_root_count()
    note = ""
    if real > len(roots):
        note = f"no rational member, discriminant {format_scalar(g.discriminant())}"
    return roots, real, note


def mia_census(d, partners: bool = True) -> MIACensus:
    """Maximal isotropic abelian subalgebras through the five-form ansatz.

    Structural assumptions are checked first: a 1-dimensional center inside a
    5-dimensional commutant, with ``ad x`` invertible on ``[D,D]/Z`` so that no
    abelian subalgebra reaches outside ``[D,D]``.
    """
    d = _as_double(d)
    alg = d.algebra
    try:
        q = quotient_data(d)
    except NotApplicableError as exc:
        return MIACensus((), False, note=str(exc))
    if q.t.det() == 0:
        return MIACensus((), False, note="ad x is singular on [D,D]/Z; ansatz reduction does not apply")
    hb = _hyperbolic_basis(d, q.w)
    if hb is None:
        return MIACensus((), False, note="no rational hyperbolic basis of [D,D]/Z found")
    u1, u2, v1, v2 = hb
    z = q.z.basis[0]
    zero = (Fraction(0),) * alg.dim

    def neg(v):
        return tuple(-x for x in v)

    fixed = {1: (u1, v2), 4: (u2, v1), 5: (v1, v2)}
    families: list[MIAFamily] = []
    fixed_ok = {}
    for form, (p, r) in fixed.items():
        ok = not any(alg.bracket(p, r))
        fixed_ok[form] = ok
    # form 2: {u1 + a v2, u2 - a v1};  form 3: {u1 + a u2, -a v1 + v2}
    param = {2: ((u1, v2), (u2, neg(v1))), 3: ((u1, u2), (v2, neg(v1)))}
    solved = {}
    for form, ((p0, p1), (q0, q1)) in param.items():
        solved[form] = _solve_family(_abelian_conditions(alg, p0, p1, q0, q1))

    if fixed_ok[1]:
        families.append(MIAFamily(1, ((u1, zero), (v2, zero)), z, Fraction(0)))
    for form in (2, 3):
        (p0, p1), (q0, q1) = param[form]
        res = solved[form]
        if res == "all":
            families.append(MIAFamily(form, ((p0, p1), (q0, q1)), z, "all"))
            continue
        roots, real, note = res
        for r in roots:
            if form == 3 and r == 0 and fixed_ok[1]:
                continue  # coincides with form 1
            families.append(MIAFamily(form, ((p0, p1), (q0, q1)), z, r))
        for _ in range(real - len(roots)):
            families.append(MIAFamily(form, ((p0, p1), (q0, q1)), z, None, note))
    for form in (4, 5):
        if fixed_ok[form]:
            p, r = fixed[form]
            families.append(MIAFamily(form, ((p, zero), (r, zero)), z, Fraction(0)))

    def ruling(form_param, form_fixed):
        res = solved[form_param]
        if res == "all":
            return "all"
        return str(res[1] + int(fixed_ok[form_fixed]))

    rulings = tuple(sorted((ruling(2, 5), ruling(3, 4))))
    for fam in families:
        if not is_abelian_isotropic(d, fam):
            raise InternalConsistencyError(f"census produced a non-abelian or non-isotropic subspace (form {fam.form})")
    if partners:
        families = [_with_partner(d, fam) for fam in families]
    return MIACensus(tuple(families), True, rulings)


def is_abelian_isotropic(d: DoubleAlgebra, fam: MIAFamily, alpha=None) -> bool:
    if fam.alpha is None and alpha is None:
        return True  # irrational member; checked symbolically through the root polynomial
    vecs = fam.member(alpha)
    s = Subspace.span(d.algebra, vecs)
    if s.dim != 3:
        return False
    return all(d.pairing(u, v) == 0 for u in vecs for v in vecs) and all(
        not any(d.algebra.bracket(u, v)) for u in vecs for v in vecs)


def _with_partner(d: DoubleAlgebra, fam: MIAFamily) -> MIAFamily:
    if fam.alpha is None:
        return fam
    a_vecs = fam.member()
    found = dual_partner(d, a_vecs)
    if found is None:
        return MIAFamily(fam.form, fam.vectors, fam.z, fam.alpha, fam.note, False)
    basis, label = found
    return MIAFamily(fam.form, fam.vectors, fam.z, fam.alpha, fam.note, True, label, tuple(basis))


def _lagrangian_complement(d: DoubleAlgebra, a_vecs: list[tuple]):
    n = d.algebra.dim
    units = d.algebra.basis()
    import itertools
    for combo in itertools.combinations(range(n), 3):
        e = [units[i] for i in combo]
        m = Matrix([[d.pairing(a, x) for x in e] for a in a_vecs])
        if m.det() == 0:
            continue
        inv = m.inverse()
        # b_j = sum_k e_k (m^-1)_{kj} so that <a_i, b_j> = delta_ij
        b = [tuple(sum((inv[k, j] * e[k][r] for k in range(3)), Fraction(0)) for r in range(n)) for j in range(3)]
        iso = []
        for j in range(3):
            v = list(b[j])
            for k in range(3):
                c = d.pairing(b[j], b[k]) / 2
                v = [x - c * y for x, y in zip(v, a_vecs[k])]
            iso.append(tuple(v))
        return iso
    return None


def _complement_system(d: DoubleAlgebra, a_vecs: list[tuple]):
    """Closure equations for the complements ``b_i + sum_j phi_ij a_j`` of ``span(a_vecs)``."""
    import sympy

    alg = d.algebra
    b = _lagrangian_complement(d, a_vecs)
    if b is None:
        return None
    syms = sympy.symbols("x y z")
    x, y, zz = syms
    phi = [[0, x, y], [-x, 0, zz], [-y, -zz, 0]]
    n = alg.dim
    a_sym = [[sympy.Rational(v.numerator, v.denominator) for v in a] for a in a_vecs]
    b_sym = []
    for i in range(3):
        vec = [sympy.Rational(v.numerator, v.denominator) for v in b[i]]
        for j in range(3):
            vec = [vv + phi[i][j] * aa for vv, aa in zip(vec, a_sym[j])]
        b_sym.append(vec)
    form = [[int(d.form[i, j]) for j in range(n)] for i in range(n)]
    cst = [[[sympy.Rational(alg.c[i][j][k].numerator, alg.c[i][j][k].denominator) for k in range(n)]
            for j in range(n)] for i in range(n)]

    def br(u, v):
        return [sympy.expand(sum(u[i] * v[j] * cst[i][j][k] for i in range(n) for j in range(n) if cst[i][j][k]))
                for k in range(n)]

    def pair(u, v):
        return sum(u[i] * v[j] for i in range(n) for j in range(n) if form[i][j])

    eqs = []
    for i in range(3):
        for j in range(i + 1, 3):
            w = br(b_sym[i], b_sym[j])
            coeffs = [sympy.expand(pair(w, a_sym[k])) for k in range(3)]
            resid = [sympy.expand(w[r] - sum(coeffs[k] * b_sym[k][r] for k in range(3))) for r in range(n)]
            eqs.extend(e for e in resid if e != 0)
    return b, syms, eqs


_SAMPLES = (0, 1, -1, 2)


def _rational_points(syms, eqs) -> tuple[list[dict], bool]:
    """Rational solutions (sampling free parameters) and whether any real one exists."""
    import sympy

    zero = {s: sympy.Integer(0) for s in syms}
    if not eqs:
        return [zero], True
    points, real = [], False
    if all(e.subs(zero) == 0 for e in eqs):
        points.append(zero)
        real = True
    for sol in sympy.solve(eqs, list(syms), dict=True):
        exprs = {s: sympy.sympify(sol.get(s, s)) for s in syms}
        free = sorted(set().union(*(e.free_symbols for e in exprs.values())), key=str)
        for val in _SAMPLES if free else (0,):
            vals = {s: sympy.nsimplify(e.subs({f: val for f in free})) for s, e in exprs.items()}
            if all(v.is_real for v in vals.values()):
                real = True
                if all(v.is_rational for v in vals.values()) and vals not in points:
                    points.append(vals)
    return points, real


def dual_partners(d: DoubleAlgebra, a_vecs: list[tuple]) -> tuple[list, bool]:
    """Isotropic complement subalgebras of ``span(a_vecs)`` with their Bianchi types.

    Complements are ``b_i + sum_j phi_ij a_j`` with ``phi`` antisymmetric, so
    three unknowns; the closure conditions are solved exactly and free
    parameters of the solution set are sampled at a few small integers.
    Returns ``([(basis, label), ...], real_solution_exists)``.
    """
    system = _complement_system(d, a_vecs)
    if system is None:
        return [], False
    b, syms, eqs = system
    points, real = _rational_points(syms, eqs)
    alg = d.algebra
    out = []
    for pt in points:
        fr = [Fraction(int(pt[s].p), int(pt[s].q)) for s in syms]
        phi = [[Fraction(0), fr[0], fr[1]], [-fr[0], Fraction(0), fr[2]], [-fr[1], -fr[2], Fraction(0)]]
        basis = []
        for i in range(3):
            v = list(b[i])
            for j in range(3):
                v = [vv + phi[i][j] * aa for vv, aa in zip(v, a_vecs[j])]
            basis.append(tuple(v))
        sub = Subspace(alg, basis)
        if not subspace_predicates(alg, sub)["is_subalgebra"] or any(d.pairing(u, v) for u in basis for v in basis):
            raise InternalConsistencyError("dual partner solution is not an isotropic subalgebra")
        out.append((basis, bianchi_classify(alg.restrict(sub))))
    return out, real


def dual_partner(d: DoubleAlgebra, a_vecs: list[tuple]):
    """The first complement found by :func:`dual_partners`, or ``None`` if none is real."""
    found, real = dual_partners(d, a_vecs)
    if found:
        return found[0]
    return ([], None) if real else None


# --- the profile -----------------------------------------------------------------


@dataclass(frozen=True)
class InvariantProfile:
    name: str
    killing_signature: tuple[int, int, int]
    series: SeriesProfile
    split: SplitInvariant | NotApplicable
    levi: LeviRestrictionClass | NotApplicable
    center_signature: tuple[int, int, int]
    quotient_spectrum: QuotientSpectrum | NotApplicable
    quotient_form: tuple | NotApplicable
    mia: MIACensus | NotApplicable

    def table_row(self) -> tuple:
        return self.killing_signature + self.series.as_tuple()

    def separating(self) -> dict:
        """The isomorphism invariants, keyed by name, in comparison order."""
        return {
            "Killing signature": self.killing_signature,
            "series dimensions": self.series.as_tuple(),
            "split coefficients": _key(self.split),
            "Levi restriction": _key(self.levi),
            "center form signature": self.center_signature,
            "quotient spectrum": _key(self.quotient_spectrum),
            "quotient nilpotent form": _key(self.quotient_form),
            "MIA rulings": self.mia.rulings if isinstance(self.mia, MIACensus) and self.mia.complete else None,
        }


def _key(x):
    if isinstance(x, NotApplicable):
        return None
    if isinstance(x, SplitInvariant):
        return (x.s, x.p)
    if isinstance(x, LeviRestrictionClass):
        return (x.tag, x.ratio)
    if isinstance(x, QuotientSpectrum):
        return (x.sign, x.ratio)
    return x


def first_difference(p: InvariantProfile, q: InvariantProfile) -> str | None:
    """Name of the first invariant on which two profiles disagree, with both values."""
    sp, sq = p.separating(), q.separating()
    for k in sp:
        if sp[k] != sq[k]:
            return f"{k}: {_show(sp[k])} vs {_show(sq[k])}"
    return None


def _show(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, tuple):
        return "(" + ", ".join(_show(x) for x in v) + ")"
    if isinstance(v, Fraction):
        return format_scalar(v)
    return str(v)


def _guard(fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except (NotApplicableError, UnsupportedCase) as exc:
        return NotApplicable(str(exc))


def invariant_profile(t, partners: bool = False) -> InvariantProfile:
    """All invariants of the double of ``t`` (a triple or an already built double)."""
    d = _as_double(t)
    alg = d.algebra
    k = killing_gram(alg)
    sig = signature(k)
    series = series_profile(alg)
    split = _guard(semisimple_split_coeffs, d) if sig[2] == 0 else NotApplicable("Killing form degenerate")
    levi = _guard(levi_restriction_class, d)
    qs = _guard(quotient_spectrum, d)
    qf = _guard(quotient_form_signature, d) if not isinstance(qs, NotApplicable) else NotApplicable(qs.reason)
    if isinstance(qs, NotApplicable):
        mia = NotApplicable(qs.reason)
    else:
        mia = mia_census(d, partners=partners)
    return InvariantProfile(d.name, sig, series, split, levi, center_form_signature(d), qs, qf, mia)


# --- the reference partition by Killing signature and series dimensions -------------

@dataclass(frozen=True)
class TableRow:
    killing_signature: tuple[int, int, int]
    series: tuple[int, int, int, int, int]
    labels: tuple[str, ...]
    condition: str = ""  # restriction on ``a`` for the 7_a rows

    def matches(self, label: str, params) -> bool:
        if label not in self.labels:
            return False
        a = params.get("a")
        if self.condition == "a>1":
            return a > 1
        if self.condition == "a<1":
            return a < 1
        if self.condition == "a=1":
            return a == 1
        return True


_7A = ("(7_a|1)", "(7_a|2.i)", "(7_a|2.ii)")

TABLE1: tuple[TableRow, ...] = (
    TableRow((3, 3, 0), (6, 6, 6, 6, 6), ("(9|5|b)", "(8|5.ii|b)", "(7_a|7_{1/a}|b)", "(7_0|5.ii|b)")),
    TableRow((4, 2, 0), (6, 6, 6, 6, 6), ("(8|5.i|b)", "(6_a|6_{1/a}.i|b)", "(6_0|5.iii|b)")),
    TableRow((0, 3, 3), (6, 6, 6, 6, 6), ("(9|1)",)),
    TableRow((2, 1, 3), (6, 6, 6, 6, 6), ("(8|1)", "(8|2.iii)", "(7_0|4|b)", "(7_0|5.i)", "(6_0|4.i|b)",
                                          "(6_0|5.i)", "(5|2.ii)", "(4|2.iii|b)")),
    TableRow((2, 1, 3), (3, 3, 3, 3, 3), ("(3|3.i)",)),
    TableRow((1, 0, 5), (5, 5, 5, 1, 0), _7A, "a>1"),
    TableRow((1, 0, 5), (5, 5, 5, 1, 0), ("(6_a|1)", "(6_a|2)", "(6_a|6_{1/a}.ii)", "(6_a|6_{1/a}.iii)",
                                          "(6_0|1)", "(6_0|2)", "(6_0|4.ii)", "(6_0|5.ii)", "(5|1)", "(5|2.i)",
                                          "(4|1)", "(4|2.i)", "(4|2.ii)")),
    TableRow((1, 0, 5), (3, 3, 3, 1, 0), ("(3|1)", "(3|2)", "(3|3.ii)", "(3|3.iii)")),
    TableRow((0, 1, 5), (5, 5, 5, 1, 0), _7A, "a<1"),
    TableRow((0, 1, 5), (5, 5, 5, 1, 0), ("(7_0|1)", "(7_0|2.i)", "(7_0|2.ii)")),
    TableRow((0, 0, 6), (5, 5, 5, 1, 0), _7A, "a=1"),
    TableRow((0, 0, 6), (3, 0, 0, 0, 0), ("(2|2)",)),
    TableRow((0, 0, 6), (3, 2, 0, 0, 0), ("(2|2.i)", "(2|2.ii)")),
    TableRow((0, 0, 6), (0, 0, 0, 0, 0), ("(1|1)",)),
)

# Table labels without a catalog entry, and the catalog triple whose computed
# row they stand for.
TABLE1_UNMATCHED = {"(2|2)": "(2|1)", "(8|2.iii)": "(8|5.iii)"}


def table1_row(label: str, params=None) -> TableRow | None:
    """The reference row listing a catalog label (duals share the row of their primary)."""
    params = params or {}
    for row in TABLE1:
        if row.matches(label, params):
            return row
    for alias, target in TABLE1_UNMATCHED.items():
        if target == label:
            return next(r for r in TABLE1 if alias in r.labels)
    return None
