"""The eleven Bianchi normal forms of real 3-dimensional Lie algebras.

Normal forms are written with brackets ``[X1,X2], [X2,X3], [X3,X1]``.  The
classifier uses only isomorphism-invariant data: the dimension of the derived
algebra, the Killing signature for the semisimple case, and the trace and
determinant of ``ad x`` on a 2-dimensional derived algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exactmath import ContractViolation, Matrix, format_scalar, rational_sqrt, signature, to_scalar
from .liecore import (
    LieAlgebra,
    center,
    derived_algebra,
    killing_gram,
    subspace_predicates,
)

X1, X2, X3 = 0, 1, 2

BIANCHI_TYPES = ("1", "2", "3", "4", "5", "6_0", "6_a", "7_0", "7_a", "8", "9")


@dataclass(frozen=True)
class BianchiLabel:
    """Bianchi type plus, for ``6_a``/``7_a``, the parameter ``a > 0``.

    ``param_squared`` is always exact; ``param`` is ``None`` when ``a`` is irrational.
    """

    type: str
    param: Fraction | None = None
    param_squared: Fraction | None = None

    def __str__(self):
        if self.type in ("6_a", "7_a"):
            a = format_scalar(self.param) if self.param is not None else f"sqrt({format_scalar(self.param_squared)})"
            return f"{self.type[0]}_{a}"
        return self.type

    def matches(self, name: str) -> bool:
        return str(self) == str(parse_bianchi_label(name))


def _brackets(b12, b23, b31) -> LieAlgebra:
    """Algebra from the three brackets, each given as ``{k: coeff}``."""
    return LieAlgebra.from_brackets(
        3, {(X1, X2): b12, (X2, X3): b23, (X3, X1): b31}, labels=("X1", "X2", "X3")
    )


def bianchi_normal_form(kind: str, a=None) -> LieAlgebra:
    if kind == "9":
        return _brackets({X3: 1}, {X1: 1}, {X2: 1})
    if kind == "8":
        return _brackets({X3: -1}, {X1: 1}, {X2: 1})
    if kind == "7_a":
        return _brackets({X2: -a, X3: 1}, {}, {X2: 1, X3: a})
    if kind == "7_0":
        return _brackets({}, {X1: 1}, {X2: 1})
    if kind == "6_a":
        return _brackets({X2: -a, X3: -1}, {}, {X2: 1, X3: a})
    if kind == "6_0":
        return _brackets({}, {X1: 1}, {X2: -1})
    if kind == "5":
        return _brackets({X2: -1}, {}, {X3: 1})
    if kind == "4":
        return _brackets({X2: -1, X3: 1}, {}, {X3: 1})
    if kind == "3":
        return _brackets({X2: -1, X3: -1}, {}, {X2: 1, X3: 1})
    if kind == "2":
        return _brackets({}, {X1: 1}, {})
    if kind == "1":
        return _brackets({}, {}, {})
    raise ContractViolation(f"unknown Bianchi type {kind!r}")


_LABEL_RE = re.compile(r"^\s*([1-9])\s*(?:_\s*\{?\s*([^}\s]+)\s*\}?)?\s*$")


def parse_bianchi_label(name: str) -> BianchiLabel:
    """Parse ``"9"``, ``"6_0"``, ``"7_a"`` with a value such as ``"7_2"`` or ``"6_{1/2}"``."""
    m = _LABEL_RE.match(name)
    if not m:
        raise ContractViolation(f"unknown Bianchi label {name!r}")
    head, sub = m.groups()
    if head in "67":
        if sub is None:
            raise ContractViolation(f"Bianchi {head} needs a subscript")
        a = to_scalar(sub)
        if a == 0:
            return BianchiLabel(f"{head}_0")
        if a < 0:
            raise ContractViolation(f"Bianchi {head}_a needs a > 0, got {sub}")
        if head == "6" and a == 1:
            raise ContractViolation("Bianchi 6_a excludes a = 1")
        return BianchiLabel(f"{head}_a", a, a * a)
    if sub is not None:
        raise ContractViolation(f"Bianchi {head} takes no subscript")
    return BianchiLabel(head)


class BianchiEntry(NamedTuple):
    algebra: LieAlgebra
    identified_as: BianchiLabel
    name: str


_ALT_RE = re.compile(r"^\s*(r3|s3|r3'|r'3)\s*\(\s*([^)]+)\s*\)\s*$")


def catalog_bianchi(name: str, a=None) -> BianchiEntry:
    """Structure constants for a Bianchi label or an alternative-scheme name.

    Bianchi labels: ``"1"``..``"5"``, ``"6_0"``, ``"7_0"``, ``"8"``, ``"9"``,
    and ``"6_a"``/``"7_a"`` either with a numeric subscript or with ``a=``.
    Alternative names use the basis ``(e0, e1, e2)``: ``"R3"``, ``"n3"``,
    ``"r3(rho)"``, ``"r3'(1)"``, ``"s3(mu)"``, ``"sl(2,R)"``, ``"so(3)"``.
    """
    key = name.replace(" ", "")
    alt = _alternative(key)
    if alt is not None:
        return alt
    if key in ("6_a", "7_a"):
        if a is None:
            raise ContractViolation(f"{name} needs a value for a")
        key = f"{key[0]}_{format_scalar(to_scalar(a))}"
    label = parse_bianchi_label(key)
    alg = bianchi_normal_form(label.type, label.param)
    return BianchiEntry(alg, label, name)


def _alt_alg(brackets: dict) -> LieAlgebra:
    return LieAlgebra.from_brackets(3, brackets, labels=("e0", "e1", "e2"))


def _alternative(key: str):
    e0, e1, e2 = 0, 1, 2
    low = key.lower()
    if low in ("r3", "r^3", "ℝ³", "ℝ3"):
        return BianchiEntry(_alt_alg({}), BianchiLabel("1"), key)
    if low == "n3":
        return BianchiEntry(_alt_alg({(e1, e2): {e0: 1}}), BianchiLabel("2"), key)
    if low in ("sl(2,r)", "sl2r"):
        return BianchiEntry(bianchi_normal_form("8"), BianchiLabel("8"), key)
    if low in ("so(3)", "so3"):
        return BianchiEntry(bianchi_normal_form("9"), BianchiLabel("9"), key)
    m = _ALT_RE.match(key)
    if not m:
        return None
    kind, arg = m.groups()
    val = to_scalar(arg)
    if kind in ("r3'", "r'3"):
        if val != 1:
            raise ContractViolation("r3'(rho) is only defined for rho = 1")
        return BianchiEntry(_alt_alg({(e0, e1): {e1: 1}, (e0, e2): {e1: 1, e2: 1}}), BianchiLabel("4"), key)
    if kind == "r3":
        if not -1 <= val <= 1:
            raise ContractViolation("r3(rho) needs -1 <= rho <= 1")
        alg = _alt_alg({(e0, e1): {e1: 1}, (e0, e2): {e2: val}})
        if val == -1:
            ident = BianchiLabel("6_0")
        elif val == 0:
            ident = BianchiLabel("3")
        elif val == 1:
            ident = BianchiLabel("5")
        else:
            # 6_{(rho+1)/(rho-1)}, normalised to a positive parameter
            p = abs((val + 1) / (val - 1))
            ident = BianchiLabel("6_a", p, p * p)
        return BianchiEntry(alg, ident, key)
    if kind == "s3":
        if val < 0:
            raise ContractViolation("s3(mu) needs mu >= 0")
        alg = _alt_alg({(e0, e1): {e1: val, e2: -1}, (e0, e2): {e1: 1, e2: val}})
        ident = BianchiLabel("7_0") if val == 0 else BianchiLabel("7_a", val, val * val)
        return BianchiEntry(alg, ident, key)
    return None


def bianchi_classify(alg: LieAlgebra) -> BianchiLabel:
    """Bianchi type of a real 3-dimensional Lie algebra with rational constants."""
    if alg.dim != 3:
        raise ContractViolation(f"bianchi_classify needs a 3-dimensional algebra, got {alg.dim}")
    d1 = derived_algebra(alg)
    if d1.dim == 0:
        return BianchiLabel("1")
    if d1.dim == 1:
        return BianchiLabel("2") if center(alg).contains_subspace(d1) else BianchiLabel("3")
    if d1.dim == 3:
        p, n, _ = signature(killing_gram(alg))
        return BianchiLabel("9") if n == 3 or p == 3 else BianchiLabel("8")
    if not subspace_predicates(alg, d1)["is_abelian"]:
        raise ContractViolation("2-dimensional derived algebra is not abelian; Jacobi identity fails")
    x = next(e for e in alg.basis() if not d1.contains(e))
    cols = [d1.coordinates(alg.bracket(x, d)) for d in d1.basis]
    m = Matrix.from_columns(cols)
    tr, det = m.trace(), m.det()
    if tr == 0:
        return BianchiLabel("7_0") if det > 0 else BianchiLabel("6_0")
    disc = tr * tr - 4 * det
    t = tr * tr / det
    if disc == 0:
        return BianchiLabel("5") if m[0, 1] == 0 and m[1, 0] == 0 else BianchiLabel("4")
    if disc < 0:
        a2 = t / (4 - t)
        return BianchiLabel("7_a", rational_sqrt(a2), a2)
    a2 = t / (t - 4)
    return BianchiLabel("6_a", rational_sqrt(a2), a2)


NORMAL_FORM_LABELS = ("9", "8", "7_a", "7_0", "6_a", "6_0", "5", "4", "3", "2", "1")
