"""Command-line front end: ``drinfeld-lab <subcommand> ...``.

Exit status 0 means every check passed, 1 that a verification failed, 2 a
usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bianchi import BIANCHI_TYPES, bianchi_classify
from .catalog import BY_LABEL, DOMAIN_TEXT, PRIMARY_LABELS, catalog_on_grid, catalog_triple, default_grid, parse_grid, parse_params
from .exactmath import ContractViolation, Matrix, format_scalar, parse_scalar, signature
from .invariants import invariant_profile
from .isomorph import (PROOF_MATRICES, IsoCandidate, invert, search_iso, verify_matrix, verify_theorem)
from .liecore import check_jacobi, killing_gram, series_profile
from .manin import InvalidTriple, ad_invariance_violations, axiom_report
from .specio import FORMATS, document_triple, emit_report, export_catalog, parse_document, profile_detail

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _write(text: str, path: str | None):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _grid(args):
    return parse_grid(args.grid) if getattr(args, "grid", None) else default_grid()


# --- subcommands -------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "export":
        _write(export_catalog(catalog_on_grid(_grid(args), include_duals=False)), args.output)
        return OK
    lines = [f"Manin triples ({len(PRIMARY_LABELS)}):"]
    for label in PRIMARY_LABELS:
        doms = BY_LABEL[label].domains
        note = "; ".join(DOMAIN_TEXT[d] for _, d in sorted(doms.items()))
        lines.append(f"  {label}" + (f"    {note}" if note else ""))
    lines.append(f"Bianchi types ({len(BIANCHI_TYPES)}):")
    lines.extend(f"  {b}" for b in BIANCHI_TYPES)
    _write("\n".join(lines) + "\n", args.output)
    return OK


def cmd_invariants(args) -> int:
    if args.all:
        profiles = [invariant_profile(t) for t in catalog_on_grid(_grid(args))]
        _write(emit_report(profiles, args.format), args.output)
        return OK
    if not args.triple:
        raise ContractViolation("give --triple <label> or --all")
    prof = invariant_profile(catalog_triple(args.triple, parse_params(args.params)), partners=not args.no_partners)
    if args.format == "text":
        _write(profile_detail(prof), args.output)
    else:
        _write(emit_report([prof], args.format), args.output)
    return OK


def _read_matrix(path: str) -> Matrix:
    rows = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        body = line.split("#", 1)[0].replace(",", " ").split()
        if not body:
            continue
        try:
            rows.append([parse_scalar(x) for x in body])
        except ContractViolation as exc:
            raise ContractViolation(f"{path}, line {lineno}: {exc}") from None
    if len(rows) != 6 or any(len(r) != 6 for r in rows):
        raise ContractViolation(f"{path}: expected a 6x6 matrix")
    return Matrix(rows)


def cmd_verify_iso(args) -> int:
    src_params = parse_params(args.params)
    tgt_params = parse_params(args.to_params) if args.to_params else None
    note = ""
    if args.matrix:
        c = _read_matrix(args.matrix)
        if tgt_params is None:
            tgt_params = src_params
    else:
        pm = next((p for p in PROOF_MATRICES if (p.source, p.target) == (args.source, args.target)), None)
        rev = next((p for p in PROOF_MATRICES if (p.source, p.target) == (args.target, args.source)), None)
        if pm is not None:
            c = pm.build(src_params)
            default_tp = pm.target_params(src_params) if pm.params else {}
            note = pm.note
        elif rev is not None:
            # the stored matrix runs the other way: bind its source to --to-params
            tp = tgt_params if tgt_params is not None else src_params
            c = invert(rev.build(tp))
            default_tp = tp
            src_params = rev.target_params(tp) if rev.params else {}
            note = "inverse of the stored matrix"
        else:
            raise ContractViolation(f"no stored matrix for {args.source} -> {args.target}; pass --matrix")
        tgt_params = tgt_params if tgt_params is not None else default_tp
    src = catalog_triple(args.source, src_params)
    tgt = catalog_triple(args.target, tgt_params)
    rep = verify_matrix(c, src, tgt)
    cand = IsoCandidate(args.source, args.target, c, src.params, tgt.params, note)
    lines = [f"candidate: {cand.describe()}"]
    if note:
        lines.append(f"note: {note}")
    lines.append(f"determinant: {format_scalar(rep.determinant)}")
    lines.append(f"form preserved: {not rep.form_violations}")
    lines.append(f"brackets preserved: {not rep.bracket_violations}")
    lines.append(f"result: {'isomorphism' if rep.valid else 'NOT an isomorphism'}")
    if rep.diagnosis:
        lines.append(f"diagnosis: {rep.diagnosis}")
    _write("\n".join(lines) + "\n", args.output)
    return OK if rep.valid else FAILED


def cmd_search_iso(args) -> int:
    if args.budget <= 0:
        raise ContractViolation("--budget must be positive")
    src = catalog_triple(args.source, parse_params(args.params))
    tgt = catalog_triple(args.target, parse_params(args.to_params if args.to_params else args.params))
    res = search_iso(src, tgt, budget=args.budget)
    lines = [f"{src.display} -> {tgt.display}: {res.status}"]
    if res.reason:
        lines.append(f"reason: {res.reason}")
    if res.nodes:
        lines.append(f"nodes: {res.nodes}")
    if res.witness is not None:
        lines.append("witness:")
        lines.extend("  " + " ".join(format_scalar(x) for x in row) for row in res.witness.rows)
    _write("\n".join(lines) + "\n", args.output)
    return FAILED if res.status == "inconclusive" else OK


def cmd_verify_theorem(args) -> int:
    report = verify_theorem(_grid(args), jobs=args.jobs, budget=args.budget)
    _write(emit_report(report, args.format), args.output)
    return OK if report.ok else FAILED


def cmd_classify(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    doc = parse_document(text)
    alg = doc.algebra()
    lines = [f"dimension: {alg.dim}"]
    bad = check_jacobi(alg)
    lines.append("Jacobi identity: " + ("holds" if not bad else f"fails at {bad[0]}"))
    status = OK if not bad else FAILED
    if bad:
        _write("\n".join(lines) + "\n", args.output)
        return status
    if alg.dim == 3:
        lines.append(f"Bianchi type: {bianchi_classify(alg)}")
    elif alg.dim == 6 and doc.pairing is not None:
        try:
            t = document_triple(doc)
        except (ContractViolation, InvalidTriple) as exc:
            lines.append(f"not in the canonical triple basis ({exc}); profile of the double only")
            from .manin import DoubleAlgebra
            form = doc.pairing_matrix()
            if form.det() == 0:
                raise ContractViolation("declared pairing is degenerate")
            d = DoubleAlgebra(alg, form)
            if ad_invariance_violations(d):
                lines.append("pairing is not ad-invariant")
                _write("\n".join(lines) + "\n", args.output)
                return FAILED
            prof = invariant_profile(d, partners=True)
        else:
            checks = axiom_report(t)
            failed = [k for k, v in checks.items() if not v]
            lines.append("Manin triple axioms: " + ("all hold" if not failed else "fail: " + ", ".join(failed)))
            if failed:
                _write("\n".join(lines) + "\n", args.output)
                return FAILED
            prof = invariant_profile(t, partners=True)
        lines.append(profile_detail(prof).rstrip("\n"))
    else:
        lines.append(f"Killing signature: {signature(killing_gram(alg))}")
        lines.append(f"series [D,D], D^2, D^3, D_2, D_3: {series_profile(alg).as_tuple()}")
    _write("\n".join(lines) + "\n", args.output)
    return status


# --- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="drinfeld-lab", description="Exact computations with 6-dimensional Drinfeld doubles.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def common(sp, fmt=True):
        sp.add_argument("--output", "-o", help="write the report to a file")
        if fmt:
            sp.add_argument("--format", choices=FORMATS, default="text")

    c = sub.add_parser("catalog", help="list or export the catalog")
    c.add_argument("action", choices=("list", "export"))
    c.add_argument("--grid", help='parameter grid such as "a=2,3,1/2;b=1,2,-1" (export only)')
    common(c, fmt=False)
    c.set_defaults(func=cmd_catalog)

    i = sub.add_parser("invariants", help="invariant profile of a triple or of the whole grid")
    i.add_argument("--triple")
    i.add_argument("--params", help='bindings such as "a=2,b=1"')
    i.add_argument("--all", action="store_true")
    i.add_argument("--grid")
    i.add_argument("--no-partners", action="store_true", help="skip the dual-partner search of the MIA census")
    common(i)
    i.set_defaults(func=cmd_invariants)

    v = sub.add_parser("verify-iso", help="check a candidate isomorphism of doubles")
    v.add_argument("--from", dest="source", required=True)
    v.add_argument("--to", dest="target", required=True)
    v.add_argument("--matrix", help="file with 6 rows of 6 rationals")
    v.add_argument("--params", help="bindings of the source triple")
    v.add_argument("--to-params", help="bindings of the target triple (default: derived)")
    common(v, fmt=False)
    v.set_defaults(func=cmd_verify_iso)

    s = sub.add_parser("search-iso", help="bounded search for an isomorphism")
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--params")
    s.add_argument("--to-params")
    s.add_argument("--budget", type=int, default=200_000)
    common(s, fmt=False)
    s.set_defaults(func=cmd_search_iso)

    t = sub.add_parser("verify-theorem", help="reproduce the 22-class classification on a grid")
    t.add_argument("--grid")
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--budget", type=int, default=200_000)
    common(t)
    t.set_defaults(func=cmd_verify_theorem)

    k = sub.add_parser("classify", help="check and classify an algebra given in a .lalg file")
    k.add_argument("file")
    common(k, fmt=False)
    k.set_defaults(func=cmd_classify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except (ContractViolation, InvalidTriple, OSError) as exc:
        print(f"drinfeld-lab: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
