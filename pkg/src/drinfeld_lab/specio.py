"""The ``.lalg`` text format for algebras and triples, and report emitters.

A document is a sequence of declarations, each ending in ``;``::

    # comments run to the end of the line
    label "(7_a|1)";
    basis X1 X2 X3;
    param a = 2 where a > 0;
    [X1,X2] = -a*X2 + X3;
    [X3,X1] = X2 + a*X3;
    <X1,X~1> = 1;            # optional pairing, symmetric

Unstated brackets are zero and antisymmetry is completed automatically.
Coefficients are exact rationals, parameters, or products of them.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .exactmath import ContractViolation, Matrix, format_scalar
from .liecore import LieAlgebra
from .manin import B, DOUBLE_LABELS, ManinTriple

SCHEMA = "drinfeld-lab/1"


class ParseError(ContractViolation):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# --- tokenizer -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<string>"[^"\n]*")
  | (?P<decimal>\d+\.\d*|\.\d+)
  | (?P<number>\d+(?:\s*/\s*\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_~']*)
  | (?P<op>>=|<=|!=|==|[\[\],=;+\-*<>])
""", re.VERBOSE)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "decimal":
            raise ParseError(f"non-rational coefficient {chunk!r}; write it as p/q", line, col)
        if kind not in ("ws", "comment"):
            out.append(_Tok(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    out.append(_Tok("eof", "", line, pos - line_start + 1))
    return out


# --- document ----------------------------------------------------------------------


@dataclass
class AlgebraDocument:
    basis: tuple[str, ...] = ()
    params: dict[str, Fraction] = field(default_factory=dict)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = field(default_factory=dict)
    pairing: dict[tuple[int, int], Fraction] | None = None
    label: str | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def algebra(self) -> LieAlgebra:
        return LieAlgebra.from_brackets(self.dim, self.brackets, labels=self.basis)

    def pairing_matrix(self) -> Matrix | None:
        if self.pairing is None:
            return None
        n = self.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in self.pairing.items():
            rows[i][j] = v
            rows[j][i] = v
        return Matrix(rows)


_COMPARE = {
    ">": lambda x, y: x > y, ">=": lambda x, y: x >= y, "<": lambda x, y: x < y,
    "<=": lambda x, y: x <= y, "!=": lambda x, y: x != y, "==": lambda x, y: x == y,
}


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.doc = AlgebraDocument()
        self.index: dict[str, int] = {}

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text or t.kind == "string":
            self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return self.next()

    def parse(self) -> AlgebraDocument:
        while self.peek().kind != "eof":
            t = self.peek()
            if t.kind == "name" and t.text == "basis":
                self.basis_decl()
            elif t.kind == "name" and t.text == "param":
                self.param_decl()
            elif t.kind == "name" and t.text == "label":
                self.next()
                s = self.peek()
                if s.kind != "string":
                    self.error("expected a quoted label")
                self.next()
                self.doc.label = s.text[1:-1]
                self.expect(";")
            elif t.text == "[":
                self.bracket_decl()
            elif t.text == "<":
                self.pairing_decl()
            else:
                self.error(f"expected a declaration, found {t.text!r}")
        return self.doc

    def basis_decl(self):
        start = self.next()
        if self.doc.basis:
            self.error("basis declared twice", start)
        names = []
        while self.peek().kind == "name":
            t = self.next()
            if t.text in names or t.text in self.doc.params:
                self.error(f"duplicate symbol {t.text!r}", t)
            names.append(t.text)
        if not names:
            self.error("basis needs at least one name")
        self.expect(";")
        self.doc.basis = tuple(names)
        self.index = {n: k for k, n in enumerate(names)}

    def param_decl(self):
        self.next()
        t = self.next()
        if t.kind != "name":
            self.error("expected a parameter name", t)
        if t.text in self.doc.params or t.text in self.index:
            self.error(f"duplicate symbol {t.text!r}", t)
        self.expect("=")
        value = self.signed_rational()
        self.doc.params[t.text] = value
        if self.peek().text == "where":
            self.next()
            while True:
                self.assertion()
                if self.peek().text != ",":
                    break
                self.next()
        self.expect(";")

    def assertion(self):
        t = self.next()
        if t.kind != "name" or t.text not in self.doc.params:
            self.error(f"undeclared parameter {t.text!r}", t)
        op = self.next()
        if op.text not in _COMPARE:
            self.error(f"expected a comparison, found {op.text!r}", op)
        rhs = self.signed_rational()
        if not _COMPARE[op.text](self.doc.params[t.text], rhs):
            self.error(f"parameter {t.text} = {format_scalar(self.doc.params[t.text])} violates "
                       f"{t.text} {op.text} {format_scalar(rhs)}", t)

    def signed_rational(self) -> Fraction:
        sign = 1
        while self.peek().text in "+-" and self.peek().kind == "op":
            sign = -sign if self.next().text == "-" else sign
        t = self.next()
        if t.kind != "number":
            self.error(f"expected a rational number, found {t.text!r}", t)
        return sign * _rational(t)

    def basis_name(self) -> int:
        t = self.next()
        if t.kind != "name":
            self.error(f"expected a basis name, found {t.text!r}", t)
        if t.text not in self.index:
            self.error(f"undeclared symbol {t.text!r}", t)
        return self.index[t.text]

    def pair(self, close: str) -> tuple[int, int, _Tok]:
        if not self.doc.basis:
            self.error("declare the basis first")
        open_tok = self.next()
        i = self.basis_name()
        self.expect(",")
        j = self.basis_name()
        self.expect(close)
        return i, j, open_tok

    def bracket_decl(self):
        i, j, tok = self.pair("]")
        self.expect("=")
        terms = self.lin_comb(allow_constant=False)
        self.expect(";")
        if i == j:
            if any(terms.values()):
                self.error("[x,x] must vanish", tok)
            return
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        if key in self.doc.brackets:
            a, b = self.doc.basis[key[0]], self.doc.basis[key[1]]
            self.error(f"duplicate bracket [{a},{b}]", tok)
        self.doc.brackets[key] = {k: sign * v for k, v in terms.items() if v}

    def pairing_decl(self):
        i, j, tok = self.pair(">")
        self.expect("=")
        terms = self.lin_comb(allow_constant=True, allow_basis=False)
        self.expect(";")
        if self.doc.pairing is None:
            self.doc.pairing = {}
        key = (min(i, j), max(i, j))
        if key in self.doc.pairing:
            self.error("duplicate pairing entry", tok)
        self.doc.pairing[key] = terms.get(None, Fraction(0))

    def lin_comb(self, allow_constant: bool, allow_basis: bool = True) -> dict:
        out: dict = {}
        sign = 1
        if self.peek().text in ("+", "-") and self.peek().kind == "op":
            sign = -1 if self.next().text == "-" else 1
        while True:
            coeff, target, tok = self.term(allow_basis)
            if target is None and not allow_constant:
                self.error("constant term in a bracket; every term needs a basis element", tok)
            out[target] = out.get(target, Fraction(0)) + sign * coeff
            t = self.peek()
            if t.kind == "op" and t.text in ("+", "-"):
                self.next()
                sign = -1 if t.text == "-" else 1
            else:
                return out

    def term(self, allow_basis: bool):
        first = self.peek()
        coeff = Fraction(1)
        target = None
        while True:
            t = self.peek()
            if t.kind == "number":
                self.next()
                coeff *= _rational(t)
            elif t.kind == "name" and t.text in self.doc.params:
                self.next()
                coeff *= self.doc.params[t.text]
            elif t.kind == "name" and t.text in self.index:
                if not allow_basis:
                    self.error("basis element in a pairing value", t)
                if target is not None:
                    self.error("product of two basis elements", t)
                self.next()
                target = self.index[t.text]
            elif t.kind == "name":
                self.error(f"undeclared symbol {t.text!r}", t)
            else:
                self.error(f"expected a term, found {t.text or 'end of input'!r}", t)
            nxt = self.peek()
            if nxt.text == "*" and nxt.kind == "op":
                self.next()
                continue
            if nxt.kind in ("number", "name") and nxt.text not in ("where",):
                continue  # implicit product such as "2 X1"
            return coeff, target, first


def _rational(t: _Tok) -> Fraction:
    body = t.text.replace(" ", "")
    num, _, den = body.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", t.line, t.col)
    return Fraction(int(num), int(den) if den else 1)


def parse_document(text: str) -> AlgebraDocument:
    return _Parser(text).parse()


def parse_algebra(text: str) -> LieAlgebra:
    """Structure constants of a ``.lalg`` document."""
    return parse_document(text).algebra()


# --- emitting documents ---------------------------------------------------------------


def _lin(terms: Mapping[int, Fraction], names) -> str:
    parts = []
    for k in sorted(terms):
        v = terms[k]
        if v == 0:
            continue
        mag = abs(v)
        body = names[k] if mag == 1 else f"{format_scalar(mag)}*{names[k]}"
        if not parts:
            parts.append(("-" if v < 0 else "") + body)
        else:
            parts.append(("- " if v < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def emit_document(doc: AlgebraDocument) -> str:
    lines = []
    if doc.label is not None:
        lines.append(f'label "{doc.label}";')
    lines.append("basis " + " ".join(doc.basis) + ";")
    for name in sorted(doc.params):
        lines.append(f"param {name} = {format_scalar(doc.params[name])};")
    for (i, j) in sorted(doc.brackets):
        terms = doc.brackets[(i, j)]
        if any(terms.values()):
            lines.append(f"[{doc.basis[i]},{doc.basis[j]}] = {_lin(terms, doc.basis)};")
    if doc.pairing is not None:
        for (i, j) in sorted(doc.pairing):
            if doc.pairing[(i, j)]:
                lines.append(f"<{doc.basis[i]},{doc.basis[j]}> = {format_scalar(doc.pairing[(i, j)])};")
    return "\n".join(lines) + "\n"


def algebra_document(alg: LieAlgebra, pairing: Matrix | None = None, label: str | None = None,
                     params: Mapping | None = None) -> AlgebraDocument:
    n = alg.dim
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = {k: alg.c[i][j][k] for k in range(n) if alg.c[i][j][k]}
            if terms:
                brackets[(i, j)] = terms
    pair = None
    if pairing is not None:
        pair = {(i, j): pairing[i, j] for i in range(n) for j in range(i, n) if pairing[i, j]}
    return AlgebraDocument(tuple(alg.labels), dict(params or {}), brackets, pair, label)


def triple_document(t: ManinTriple) -> AlgebraDocument:
    """The double of a triple as a document, with the canonical pairing declared."""
    from .manin import build_double
    d = build_double(t)
    return algebra_document(d.algebra, B, t.label, t.params)


def emit_triple(t: ManinTriple) -> str:
    return emit_document(triple_document(t))


def document_triple(doc: AlgebraDocument) -> ManinTriple:
    """Recover a Manin triple from a 6-dim document in the canonical double basis."""
    if doc.dim != 6:
        raise ContractViolation("a Manin triple document needs a 6-dimensional basis")
    if doc.pairing_matrix() != B:
        raise ContractViolation("pairing is not the canonical <X_i, X~j> = delta_ij form")
    alg = doc.algebra()
    f = [[[alg.c[i][j][k] for k in range(3)] for j in range(3)] for i in range(3)]
    ft = [[[alg.c[3 + i][3 + j][3 + k] for k in range(3)] for j in range(3)] for i in range(3)]
    for i in range(3):
        for j in range(3):
            if any(alg.c[i][j][3:]) or any(alg.c[3 + i][3 + j][:3]):
                raise ContractViolation("the two halves of the basis are not subalgebras")
    t = ManinTriple(doc.label or "<document>", LieAlgebra(f, DOUBLE_LABELS[:3]), LieAlgebra(ft, DOUBLE_LABELS[3:]),
                    dict(doc.params))
    from .manin import build_double
    if build_double(t).algebra != alg:
        raise ContractViolation("mixed brackets do not match the double of the two halves")
    return t


def export_catalog(triples: Iterable[ManinTriple]) -> str:
    return "\n".join(emit_triple(t) for t in triples)


# --- reports ----------------------------------------------------------------------------


FORMATS = ("text", "csv", "json")
CSV_HEADER = ["triple", "sig_p", "sig_n", "sig_z", "dim_commutant", "dim_D2", "dim_D3", "dim_Dl2", "dim_Dl3"]


def _q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _json_value(x):
    from .invariants import (LeviRestrictionClass, MIACensus, NotApplicable, QuotientSpectrum,
                             SplitInvariant)
    if isinstance(x, NotApplicable):
        return {"applicable": False, "reason": x.reason}
    if isinstance(x, SplitInvariant):
        return {"s": _q(x.s), "p": _q(x.p)}
    if isinstance(x, LeviRestrictionClass):
        return {"tag": x.tag, "ratio": None if x.ratio is None else _q(x.ratio)}
    if isinstance(x, QuotientSpectrum):
        return {"sign": x.sign, "ratio": _q(x.ratio)}
    if isinstance(x, MIACensus):
        return {"complete": x.complete, "note": x.note, "count": x.count, "rulings": list(x.rulings),
                "families": [_family_json(f) for f in x.families]}
    if isinstance(x, tuple):
        return list(x)
    return x


def _family_json(f) -> dict:
    alpha = f.alpha if f.alpha in ("all", None) else _q(f.alpha)
    out = {"form": f.form, "alpha": alpha, "text": f.describe(DOUBLE_LABELS)}
    if f.note:
        out["note"] = f.note
    if f.dual_exists is not None:
        out["dual_exists"] = f.dual_exists
        out["dual_type"] = None if f.dual_type is None else str(f.dual_type)
    return out


def _profile_json(p) -> dict:
    return {
        "triple": p.name,
        "killing_signature": list(p.killing_signature),
        "series": dict(zip(("commutant", "lower2", "lower3", "derived2", "derived3"), p.series.as_tuple())),
        "split": _json_value(p.split),
        "levi": _json_value(p.levi),
        "center_signature": list(p.center_signature),
        "quotient_spectrum": _json_value(p.quotient_spectrum),
        "quotient_form": _json_value(p.quotient_form),
        "mia": _json_value(p.mia),
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _sig(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def profiles_text(profiles) -> str:
    rows = [("Signature", "[D,D]", "D^2,D^3", "D_2,D_3", "Manin triple")]
    for p in profiles:
        s = p.series
        rows.append((_sig(p.killing_signature), str(s.commutant), f"{s.lower2},{s.lower3}",
                     f"{s.derived2},{s.derived3}", p.name))
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    lines = ["  ".join(r[k].ljust(widths[k]) for k in range(4)) + "  " + r[4] for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def profile_detail(p) -> str:
    """Every invariant of one profile, one per line."""
    lines = [
        f"triple: {p.name}",
        f"Killing signature: {_sig(p.killing_signature)}",
        "series [D,D]; D^2,D^3; D_2,D_3: "
        f"{p.series.commutant}; {p.series.lower2},{p.series.lower3}; {p.series.derived2},{p.series.derived3}",
        f"split coefficients: {p.split}",
        f"Levi restriction: {p.levi}",
        f"center form signature: {_sig(p.center_signature)}",
        f"quotient spectrum: {p.quotient_spectrum}",
        f"quotient nilpotent form: {_sig(p.quotient_form) if isinstance(p.quotient_form, tuple) else p.quotient_form}",
    ]
    from .invariants import MIACensus
    if isinstance(p.mia, MIACensus):
        lines.append(f"MIA census: {p.mia.summary()}")
        for f in p.mia.families:
            extra = ""
            if f.dual_exists is True:
                extra = f"; dual partner {f.dual_type}" if f.dual_type is not None else "; dual partner (irrational)"
            elif f.dual_exists is False:
                extra = "; no dual partner"
            lines.append(f"  form {f.form}: {f.describe(DOUBLE_LABELS)}{extra}")
    else:
        lines.append(f"MIA census: {p.mia}")
    return "\n".join(lines) + "\n"


def _profiles_csv(profiles) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for p in profiles:
        w.writerow([p.name, *p.killing_signature, *p.series.as_tuple()])
    return buf.getvalue()


def _report_text(r) -> str:
    out = []
    for c in r.classes:
        head = " ~ ".join(c.listed) + (f", {c.domain}" if c.domain else "")
        out.append(f"Class {c.item}: {head}")
        out.append("  members: " + ", ".join(c.member_labels()))
        for inst in c.instances:
            params = ",".join(f"{k}={format_scalar(v)}" for k, v in sorted(inst.params.items())) or "-"
            kinds: dict[str, int] = {}
            for _, how in inst.witnesses:
                kinds[how] = kinds.get(how, 0) + 1
            summary = ", ".join(f"{n} {k}" for k, n in sorted(kinds.items())) or "single triple"
            out.append(f"  instance {params}: {len(inst.members)} triples; witnesses: {summary}")
            out.append("    " + ", ".join(n.display for n in inst.members))
        out.append("")
    out.append("Separating invariants between classes:")
    for a, b, diff in r.separations:
        out.append(f"  {a} vs {b}: {diff}")
    out.append("Separating invariants between parameter instances:")
    for item, p1, p2, diff in r.instance_separations:
        out.append(f"  class {item}, {p1} vs {p2}: {diff}")
    if r.searches:
        out.append("Search witnesses:")
        for a, b, status in r.searches:
            out.append(f"  {a} -> {b}: {status}")
    out.append("Annotations:")
    out.extend(f"  - {a}" for a in r.annotations)
    if r.failures:
        out.append("Failures:")
        out.extend(f"  - {f}" for f in r.failures)
    out.append(f"{len(r.classes)} classes; {r.triples} triples; {r.edges_verified} witness checks; "
               f"{len(r.failures)} failures")
    return "\n".join(out) + "\n"


def _report_csv(r) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["triple", "params", "class", "instance", *CSV_HEADER[1:]])
    for c in r.classes:
        for inst in c.instances:
            iparams = ",".join(f"{k}={format_scalar(v)}" for k, v in sorted(inst.params.items()))
            for n in inst.members:
                p = n.profile
                nparams = ",".join(f"{k}={format_scalar(v)}" for k, v in sorted(n.params.items()))
                w.writerow([n.label, nparams, c.item, iparams, *p.killing_signature, *p.series.as_tuple()])
    return buf.getvalue()


def _report_json(r) -> str:
    classes = []
    for c in r.classes:
        insts = []
        for inst in c.instances:
            insts.append({
                "params": {k: _q(v) for k, v in sorted(inst.params.items())},
                "members": [{"triple": n.label, "params": {k: _q(v) for k, v in sorted(n.params.items())}}
                            for n in inst.members],
                "witnesses": [{"from": cand.describe().split(" -> ")[0], "to": cand.describe().split(" -> ")[1],
                               "kind": how, "matrix": [[_q(x) for x in row] for row in cand.matrix.rows]}
                              for cand, how in inst.witnesses],
                "profile": _profile_json(inst.profile),
            })
        classes.append({"item": c.item, "listed": list(c.listed), "domain": c.domain, "instances": insts})
    return _dump({
        "schema": SCHEMA,
        "kind": "classification",
        "class_count": len(r.classes),
        "ok": r.ok,
        "classes": classes,
        "separations": [{"classes": [a, b], "invariant": d} for a, b, d in r.separations],
        "instance_separations": [{"class": i, "instances": [p1, p2], "invariant": d}
                                 for i, p1, p2, d in r.instance_separations],
        "searches": [{"from": a, "to": b, "status": s} for a, b, s in r.searches],
        "annotations": list(r.annotations),
        "failures": list(r.failures),
    })


def emit_report(obj, fmt: str = "text") -> str:
    """Render a classification report or a sequence of invariant profiles."""
    if fmt not in FORMATS:
        raise ContractViolation(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
    from .isomorph import ClassificationReport
    if isinstance(obj, ClassificationReport):
        return {"text": _report_text, "csv": _report_csv, "json": _report_json}[fmt](obj)
    profiles = list(obj)
    if fmt == "text":
        return profiles_text(profiles)
    if fmt == "csv":
        return _profiles_csv(profiles)
    return _dump({"schema": SCHEMA, "kind": "profiles", "profiles": [_profile_json(p) for p in profiles]})
