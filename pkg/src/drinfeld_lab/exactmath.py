"""Exact scalars, polynomials and small dense matrices.

Rationals are plain :class:`fractions.Fraction` values.  :class:`GaussianScalar`
adds the field Q(i), which is all the complexified split-coefficient test needs.
Every routine here is generic over the field: it only uses ``+ - * /``,
comparison with ``0`` and the helpers :func:`is_zero` / :func:`to_scalar`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence


class ContractViolation(ValueError):
    """Raised when an input breaks a documented precondition."""


# --------------------------------------------------------------------------
# scalars


class GaussianScalar:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianScalar(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianScalar(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianScalar(self.re * o.re - self.im * o.im,
                              self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianScalar(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianScalar(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianScalar({format_scalar(self.re)}, {format_scalar(self.im)})"

    def __str__(self):
        return format_scalar(self)


I = GaussianScalar(0, 1)

Scalar = Fraction  # the default field


def to_scalar(x):
    """Coerce ints, strings and Fractions to :class:`Fraction`; pass Q(i) through."""
    if isinstance(x, GaussianScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        raise ContractViolation(f"floats are not exact scalars: {x!r}")
    return Fraction(x)


def is_zero(x) -> bool:
    return not x


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text: str):
    """Parse ``"p"``, ``"p/q"`` or a Gaussian form such as ``"1/2-3/4*i"``."""
    m = _RATIONAL_RE.match(text)
    if m:
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ContractViolation(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)
    body = text.replace(" ", "")
    if body.endswith("i"):
        body = body[:-1].rstrip("*")
        cut = max(body.rfind("+"), body.rfind("-"))
        real_txt, imag_txt = (body[:cut], body[cut:]) if cut > 0 else ("", body)
        if imag_txt in ("", "+", "-"):
            imag_txt += "1"
        try:
            re_part = parse_scalar(real_txt) if real_txt else Fraction(0)
            im_part = parse_scalar(imag_txt)
        except ContractViolation:
            pass
        else:
            if isinstance(re_part, Fraction) and isinstance(im_part, Fraction):
                return GaussianScalar(re_part, im_part)
    raise ContractViolation(f"not an exact scalar: {text!r}")


def format_scalar(x) -> str:
    """Canonical decimal-free text: ``"p"``, ``"p/q"`` or ``"re+im*i"``."""
    if isinstance(x, GaussianScalar):
        if x.im == 0:
            return format_scalar(x.re)
        im = x.im
        mag = "" if abs(im) == 1 else format_scalar(abs(im)) + "*"
        if x.re == 0:
            return ("-" if im < 0 else "") + mag + "i"
        return format_scalar(x.re) + ("-" if im < 0 else "+") + mag + "i"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or ``None`` if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = _isqrt_exact(p), _isqrt_exact(q)
    if rp is None or rq is None:
        return None
    return Fraction(rp, rq)


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Univariate polynomial, coefficients lowest degree first.

    The coefficient list is trimmed so the leading coefficient is nonzero;
    the zero polynomial has an empty list and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, GaussianScalar) else Fraction(c) for c in coeffs]
        while cs and is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Polynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> Polynomial:
        lc = self.lead()
        return Polynomial(c / lc for c in self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Polynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: Polynomial):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lc = other.lead()
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            factor = rem[-1] / lc
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
            while rem and is_zero(rem[-1]):
                rem.pop()
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: Polynomial) -> Polynomial:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def exact_root(self, k: int):
        """Monic ``q`` with ``q**k == self``, or ``None``.  ``self`` must be monic."""
        if not self.is_monic() or self.degree % k:
            return None
        d = self.degree // k
        # undetermined coefficients, top down: the k-th power fixes them one at a time
        q = [Fraction(0)] * d + [Fraction(1)]
        for j in range(d - 1, -1, -1):
            trial = Polynomial(q) ** k
            # coefficient of x^(d*k - (d - j)) is linear in q[j] with slope k
            idx = d * (k - 1) + j
            diff = self.coeffs[idx] - (trial.coeffs[idx] if idx < len(trial.coeffs) else 0)
            q[j] = q[j] + diff / k
        cand = Polynomial(q)
        return cand if cand ** k == self else None

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots (degree <= 2 handled in closed form, else rational root test)."""
        p = self
        if p.is_zero() or p.degree < 1:
            return []
        if any(isinstance(c, GaussianScalar) for c in p.coeffs):
            raise ContractViolation("rational_roots needs rational coefficients")
        p = p.monic()
        if p.degree == 1:
            return [-p.coeffs[0]]
        if p.degree == 2:
            c, b = p.coeffs[0], p.coeffs[1]
            disc = b * b - 4 * c
            r = rational_sqrt(disc)
            if r is None:
                return []
            return sorted({(-b + r) / 2, (-b - r) / 2})
        return _rational_root_test(p)

    def real_root_count(self) -> int:
        """Number of distinct real roots; implemented for degree <= 2."""
        p = self.monic() if not self.is_zero() else self
        if p.degree < 1:
            return 0
        if p.degree == 1:
            return 1
        if p.degree == 2:
            c, b = p.coeffs[0], p.coeffs[1]
            disc = b * b - 4 * c
            return 2 if disc > 0 else (1 if disc == 0 else 0)
        raise ContractViolation("real_root_count implemented for degree <= 2 only")

    def discriminant(self):
        if self.degree != 2:
            raise ContractViolation("discriminant implemented for quadratics only")
        c, b, a = self.coeffs
        return b * b - 4 * a * c

    def __repr__(self):
        return f"Polynomial([{', '.join(format_scalar(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if is_zero(c):
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if isinstance(c, GaussianScalar) and c.im != 0:
                cs = f"({format_scalar(c)})"
                terms.append(cs + ("*" + mono if mono else ""))
                continue
            c = c.re if isinstance(c, GaussianScalar) else c
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = format_scalar(mag) if (mag != 1 or not mono) else ""
            if body and mono:
                body += "*"
            terms.append(f"{sign} {body}{mono}")
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:] if s.startswith("- ") else s


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def _rational_root_test(p: Polynomial) -> list[Fraction]:
    import math

    denom = 1
    for c in p.coeffs:
        denom = denom * Fraction(c).denominator // math.gcd(denom, Fraction(c).denominator)
    ints = [int(c * denom) for c in p.coeffs]
    roots = set()
    if ints[0] == 0:
        roots.add(Fraction(0))
        k = next(i for i, c in enumerate(ints) if c)
        ints = ints[k:]
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if p(r) == 0:
                    roots.add(r)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]


# --------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rs = tuple(tuple(to_scalar(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rs[0]) if rs else 0
        if any(len(r) != ncols for r in rs):
            raise ContractViolation("ragged matrix rows")
        self.rows = rs
        self.nrows = len(rs)
        self.ncols = ncols

    # constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> Matrix:
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)], ncols=m)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def diag(cls, entries: Sequence) -> Matrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> Matrix:
        if not cols:
            return cls([[] for _ in range(nrows or 0)], ncols=0)
        return cls(zip(*cols), ncols=len(cols))

    # basic protocol ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self.rows), ncols=self.nrows) if self.nrows else Matrix.zeros(self.ncols, 0)

    def __add__(self, other: Matrix) -> Matrix:
        _same_shape(self, other)
        return Matrix(([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), ncols=self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        _same_shape(self, other)
        return Matrix(([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), ncols=self.ncols)

    def __neg__(self) -> Matrix:
        return Matrix(([-a for a in r] for r in self.rows), ncols=self.ncols)

    def scale(self, c) -> Matrix:
        return Matrix(([c * a for a in r] for r in self.rows), ncols=self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ContractViolation(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows)) if other.nrows else [() for _ in range(other.ncols)]
            return Matrix(([_dot(r, c) for c in cols] for r in self.rows), ncols=other.ncols)
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise ContractViolation("vector length mismatch")
        return tuple(_dot(r, vec) for r in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(is_zero(x) for r in self.rows for x in r)

    def trace(self):
        _require_square(self)
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    # elimination ------------------------------------------------------

    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form and pivot columns."""
        a = [list(r) for r in self.rows]
        pivots: list[int] = []
        row = 0
        for col in range(self.ncols):
            piv = next((i for i in range(row, self.nrows) if not is_zero(a[i][col])), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = 1 / a[row][col]
            a[row] = [x * inv for x in a[row]]
            for i in range(self.nrows):
                if i != row and not is_zero(a[i][col]):
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == self.nrows:
                break
        return Matrix(a, ncols=self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        _require_square(self)
        n = self.nrows
        if n == 0:
            return Fraction(1)
        a = [list(r) for r in self.rows]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if is_zero(a[k][k]):
                swap = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
                if swap is None:
                    return Fraction(0)
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self) -> Matrix:
        _require_square(self)
        n = self.nrows
        aug = Matrix([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)])
        red, piv = aug.rref()
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix((r[n:] for r in red.rows), ncols=n)

    def solve(self, rhs: Sequence):
        """One solution ``x`` of ``self @ x = rhs`` or ``None`` if inconsistent."""
        aug = Matrix([list(r) + [b] for r, b in zip(self.rows, rhs)], ncols=self.ncols + 1)
        red, piv = aug.rref()
        if self.ncols in piv:
            return None
        x = [Fraction(0)] * self.ncols
        for i, p in enumerate(piv):
            x[p] = red.rows[i][self.ncols]
        return tuple(x)


def _dot(a, b):
    acc = Fraction(0)
    for x, y in zip(a, b):
        if not is_zero(x) and not is_zero(y):
            acc = acc + x * y
    return acc


def _same_shape(a: Matrix, b: Matrix):
    if a.shape != b.shape:
        raise ContractViolation(f"shape mismatch {a.shape} vs {b.shape}")


def _require_square(m: Matrix):
    if not m.is_square():
        raise ContractViolation(f"square matrix required, got {m.shape}")


def nullspace(m: Matrix) -> list[tuple]:
    """Basis of ``{v : m v = 0}`` read off the reduced row echelon form."""
    red, piv = m.rref()
    free = [j for j in range(m.ncols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -red.rows[i][f]
        basis.append(tuple(v))
    return basis


def rank(m: Matrix) -> int:
    return m.rank()


def det(m: Matrix):
    return m.det()


def char_poly(m: Matrix) -> Polynomial:
    """``det(x I - m)`` by the Faddeev-LeVerrier recursion (characteristic 0)."""
    _require_square(m)
    n = m.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.zeros(n)
    ident = Matrix.identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(c))
        c = -mk.trace() / k
        coeffs[n - k] = c
    return Polynomial(coeffs)


def signature(m: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a rational symmetric matrix.

    Symmetric congruence elimination: pivot on a nonzero diagonal entry when
    there is one, otherwise split a hyperbolic pair ``e_i +- e_j`` off an
    off-diagonal entry.
    """
    if not m.is_square():
        raise ContractViolation(f"signature needs a square matrix, got {m.shape}")
    if not m.is_symmetric():
        raise ContractViolation("signature needs a symmetric matrix")
    if any(isinstance(x, GaussianScalar) for r in m.rows for x in r):
        raise ContractViolation("signature is defined over the rationals only")
    a = [list(r) for r in m.rows]
    pos = neg = 0
    n = len(a)
    while n:
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j gives diagonal 2 a_ij != 0
            for t in range(n):
                a[i][t] = a[i][t] + a[j][t]
            for t in range(n):
                a[t][i] = a[t][i] + a[t][j]
            k = i
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [t for t in range(n) if t != k]
        a = [[a[r][c] - a[r][k] * a[k][c] / d for c in rest] for r in rest]
        n -= 1
    return pos, neg, m.nrows - pos - neg


def congruent(m: Matrix, p: Matrix) -> Matrix:
    """``p^T m p``."""
    return p.T @ m @ p
