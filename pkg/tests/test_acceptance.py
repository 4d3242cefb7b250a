"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for the summary alone.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

from drinfeld_lab.catalog import BY_LABEL, PRIMARY_LABELS, catalog_on_grid, catalog_triple, default_grid, grid_points
from drinfeld_lab.exactmath import signature
from drinfeld_lab.invariants import (
    TABLE1, TABLE1_UNMATCHED, center_form_signature, levi_restriction_class, mia_census, semisimple_split_coeffs, table1_row,
)
from drinfeld_lab.isomorph import PROOF_MATRICES, THEOREM_CLASSES, catalog_iso, verify_double_iso, verify_matrix, verify_theorem
from drinfeld_lab.liecore import check_jacobi, killing_gram, series_profile
from drinfeld_lab.manin import axiom_report, build_double, dual_label

sys.path.insert(0, str(Path(__file__).parent))


def _primary(label: str) -> str:
    return label if label in BY_LABEL else dual_label(label)


def _report(n: int, ok: bool, detail: str):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    return ok


# 1 -----------------------------------------------------------------------------------

def criterion_1():
    start = time.perf_counter()
    triples = catalog_on_grid()
    bad = []
    for t in triples:
        alg = build_double(t).algebra
        got = signature(killing_gram(alg)) + series_profile(alg).as_tuple()
        row = table1_row(_primary(t.label), t.params)
        if row is None or row.killing_signature + row.series != got:
            bad.append(t.display)
    # the "(2|2)" row has no catalog entry; it is the computed row of (2|1)
    alg21 = build_double(catalog_triple(TABLE1_UNMATCHED["(2|2)"])).algebra
    row22 = next(r for r in TABLE1 if "(2|2)" in r.labels)
    flagged = signature(killing_gram(alg21)) + series_profile(alg21).as_tuple() == row22.killing_signature + row22.series
    labels = {_primary(t.label) for t in triples}
    secs = time.perf_counter() - start
    ok = not bad and flagged and labels == set(PRIMARY_LABELS) and secs < 10
    return ok, (f"{len(triples)} triples, {len(labels)} catalog labels, mismatches {bad or 'none'}, "
                f'"(2|2)" row -> (2|1) {"resolved" if flagged else "NOT resolved"}, {secs:.1f}s')


# 2 -----------------------------------------------------------------------------------

def criterion_2():
    bad = []
    triples = catalog_on_grid()
    for t in triples:
        checks = axiom_report(t)
        if not all(checks.values()) or check_jacobi(build_double(t).algebra):
            bad.append(t.display)
    return not bad, f"{len(triples)} triples, failures {bad or 'none'}"


# 3 -----------------------------------------------------------------------------------

def criterion_3():
    grid = default_grid()
    checked, bad = 0, []
    for pm in PROOF_MATRICES:
        pts = grid_points(pm.source, grid) if pm.params else [{}]
        for p in pts:
            try:
                cand = catalog_iso(pm.source, pm.target, p)
                rep = verify_double_iso(cand)
            except Exception as exc:  # target parameters off the catalog domain
                bad.append(f"{pm.source}->{pm.target} {p}: {exc}")
                continue
            checked += 1
            if not rep.valid:
                bad.append(cand.describe())
    return not bad, f"{len(PROOF_MATRICES)} matrices, {checked} instances verified, failures {bad or 'none'}"


# 4 -----------------------------------------------------------------------------------

def criterion_4():
    grid = default_grid()
    problems = []
    seen: dict[tuple, tuple] = {}
    for b in grid["b"]:
        if b <= 0:
            continue
        qs = {lbl: semisimple_split_coeffs(catalog_triple(lbl, {"b": b})) for lbl in ("(9|5|b)", "(8|5.ii|b)", "(7_0|5.ii|b)")}
        if any((q.s, q.p) != (0, 1 / (16 * b * b)) for q in qs.values()):
            problems.append(f"class 1 at b={b}")
        for lbl in ("(8|5.i|b)", "(6_0|5.iii|b)"):
            q = semisimple_split_coeffs(catalog_triple(lbl, {"b": b}))
            if (q.s, q.p) != (0, -1 / (16 * b * b)):
                problems.append(f"{lbl} at b={b}")
    for p in grid_points("(7_a|7_{1/a}|b)", grid):
        a, b = p["a"], p["b"]
        q = semisimple_split_coeffs(catalog_triple("(7_a|7_{1/a}|b)", p))
        want = (-a * a / (b * (a * a + 1) ** 2), a * a / (16 * b * b * (a * a + 1) ** 2))
        if (q.s, q.p) != want:
            problems.append(f"(7_a|7_1/a|b) at a={a}, b={b}")
    for lbl in ("(7_a|7_{1/a}|b)", "(6_a|6_{1/a}.i|b)"):
        for p in grid_points(lbl, grid):
            q = semisimple_split_coeffs(catalog_triple(lbl, p))
            key = (lbl, max(p["a"], 1 / p["a"]), p["b"])
            for other, val in seen.items():
                if val == (q.s, q.p) and other[0] == lbl and other != key:
                    problems.append(f"{lbl}: {key[1:]} and {other[1:]} share q")
            seen[key] = (q.s, q.p)
    return not problems, f"problems {problems or 'none'}"


# 5 -----------------------------------------------------------------------------------

CLASS_1 = ("(8|1)", "(8|2.iii)", "(7_0|5.i)", "(6_0|5.i)", "(5|2.ii)")


def criterion_5():
    problems = []
    for lbl in CLASS_1:
        name = TABLE1_UNMATCHED.get(lbl, lbl)
        r = levi_restriction_class(catalog_triple(name), lifts=3)
        if r.tag != "isotropic":
            problems.append(f"{lbl}: {r}")
    bs = default_grid()["b"]
    for b in bs:
        for lbl, pb in (("(7_0|4|b)", b), ("(6_0|4.i|b)", -b), ("(4|2.iii|b)", b)):
            for seed in range(3):
                r = levi_restriction_class(catalog_triple(lbl, {"b": pb}), lifts=3, seed=seed)
                if r.tag != "proportional" or r.ratio != -1 / b:
                    problems.append(f"{lbl} b={pb}: {r}")
    return not problems, f"class 1 isotropic, class 2 ratio -1/b at b in {[str(b) for b in bs]}, problems {problems or 'none'}"


# 6 -----------------------------------------------------------------------------------

MIA_COUNTS = {"(7_a|1)": 2, "(6_a|1)": 4, "(5|1)": 5, "(4|1)": 3, "(7_0|1)": 2, "(7_0|2.i)": 1}


def criterion_6():
    problems, notes = [], []
    for lbl, n in MIA_COUNTS.items():
        for p in grid_points(lbl) if BY_LABEL[lbl].params else [{}]:
            if lbl in ("(7_a|1)", "(6_a|1)") and p.get("a") == 1:
                continue
            c = mia_census(catalog_triple(lbl, p))
            if not c.complete or c.count != n:
                problems.append(f"{lbl} {p}: {c.summary()}")
            if lbl == "(7_0|2.i)" and any(f.dual_exists for f in c.families):
                problems.append("(7_0|2.i) has a dual partner")
            if lbl in ("(7_a|1)", "(6_a|1)"):
                kind = lbl[1:4]
                types = [f.dual_type for f in c.families]
                if any(t is None or t.type != kind for t in types):
                    problems.append(f"{lbl} {p}: partners {[str(t) for t in types]}")
                off = [str(t) for t in types if t.param != p["a"]]
                if off:
                    notes.append(f"{lbl} a={p['a']}: partners {[str(t) for t in types]}")
    detail = f"counts {MIA_COUNTS}, problems {problems or 'none'}"
    if notes:
        detail += f"; parameter differs from a in {len(notes)} censuses (e.g. {notes[0]})"
    return not problems, detail


# 7 -----------------------------------------------------------------------------------

def criterion_7():
    got = (center_form_signature(catalog_triple("(2|2.i)")), center_form_signature(catalog_triple("(2|2.ii)")))
    return got == ((0, 1, 2), (1, 0, 2)), f"(2|2.i) -> {got[0]}, (2|2.ii) -> {got[1]}"


# 8 -----------------------------------------------------------------------------------

def _canonical(listed: str) -> str:
    lbl = TABLE1_UNMATCHED.get(listed, listed).replace("|-b", "|b").replace("7_1", "7_a")
    return _primary(lbl)


def criterion_8(report=None):
    report = report or verify_theorem()
    secs = report.seconds
    problems = list(report.failures)
    if len(report.classes) != 22:
        problems.append(f"{len(report.classes)} classes")
    for c, tc in zip(report.classes, THEOREM_CLASSES):
        want = {_canonical(x) for x in tc.listed}
        got = {_primary(x) for x in c.member_labels()}
        if got != want:
            problems.append(f"item {c.item}: {sorted(got)} != {sorted(want)}")
        for inst in c.instances:
            n = len(inst.members)
            if len(inst.witnesses) != n * (n - 1) // 2:
                problems.append(f"item {c.item} {inst.params}: {len(inst.witnesses)} witnesses for {n} members")
            for cand, _ in inst.witnesses:
                src = next(m.triple for m in inst.members if (m.label, m.params) == (cand.source, dict(cand.source_params)))
                tgt = next(m.triple for m in inst.members if (m.label, m.params) == (cand.target, dict(cand.target_params)))
                if not verify_matrix(cand.matrix, src, tgt).valid:
                    problems.append(f"witness {cand.describe()} fails")
    if len(report.separations) != 22 * 21 // 2 or any(d is None for *_, d in report.separations):
        problems.append("inter-class separation incomplete")
    placed = any("(8|5.iii)" in a for a in report.annotations)
    if not placed:
        problems.append("(8|5.iii) placement not annotated")
    ok = not problems and secs < 60
    return ok, (f"{len(report.classes)} classes, {report.triples} triples, {report.edges_verified} witness checks, "
                f"{len(report.separations)} separated pairs, (8|5.iii) annotated: {placed}, {secs:.1f}s, "
                f"problems {problems or 'none'}")


# 9 -----------------------------------------------------------------------------------

def criterion_9():
    import test_properties as tp

    suites = [
        ("B invariance (1000 random A)", tp.test_form_invariant_under_basis_change),
        ("signature congruence", tp.test_signature_congruence_invariant),
        ("witness composition/inversion", tp.test_witness_composition_and_inversion),
        ("duality involution", tp.test_duality_involution),
    ]
    failed = []
    for name, fn in suites:
        try:
            fn()
        except Exception as exc:
            failed.append(f"{name}: {exc}")
    triples = catalog_on_grid(include_duals=False)
    for t in triples:
        try:
            tp.test_parse_emit_roundtrip(t)
        except Exception:
            failed.append(f"round-trip {t.display}")
    return not failed, f"{len(suites)} property suites + round-trip on {len(triples)} triples, failures {failed or 'none'}"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9}


@pytest.mark.parametrize("n", [n for n in CRITERIA if n != 8])
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n]()
    with capsys.disabled():
        print()
        _report(n, ok, detail)
    assert ok, detail


def test_criterion_8(theorem_report, capsys):
    ok, detail = criterion_8(theorem_report)
    with capsys.disabled():
        print()
        _report(8, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = [_report(n, *fn()) for n, fn in CRITERIA.items()]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
