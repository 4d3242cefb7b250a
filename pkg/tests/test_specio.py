import csv
import io
import json
from fractions import Fraction

import pytest

from drinfeld_lab.bianchi import bianchi_classify
from drinfeld_lab.catalog import catalog_triple
from drinfeld_lab.invariants import invariant_profile
from drinfeld_lab.specio import (
    CSV_HEADER, ParseError, document_triple, emit_document, emit_report, emit_triple, parse_algebra, parse_document,
)

BIANCHI_6 = """
# 6_a with a as a parameter
basis X1 X2 X3;
param a = 2 where a > 0, a != 1;
[X1,X2] = -a*X2 - X3;
[X3,X1] = X2 + a*X3;
"""


def test_parse_parametric_document():
    doc = parse_document(BIANCHI_6)
    assert doc.params == {"a": Fraction(2)}
    assert str(bianchi_classify(doc.algebra())) == "6_2"


def test_parameter_constraint_checked():
    with pytest.raises(ParseError):
        parse_document(BIANCHI_6.replace("a = 2", "a = 1"))


@pytest.mark.parametrize("text,line", [
    ("basis X Y;\n[X,Y] = 0.5*X;\n", 2),
    ("basis X Y;\n[X,Z] = X;\n", 2),
    ("basis X Y\n[X,Y] = X;\n", 2),
    ("basis X X;\n", 1),
])
def test_parse_errors_carry_position(text, line):
    with pytest.raises(ParseError) as exc:
        parse_document(text)
    assert exc.value.line == line


def test_inconsistent_antisymmetry_rejected():
    with pytest.raises(ParseError):
        parse_algebra("basis X Y;\n[X,Y] = X;\n[Y,X] = X;\n")


def test_roundtrip_single_triple():
    t = catalog_triple("(7_a|7_{1/a}|b)", {"a": 3, "b": -1})
    doc = parse_document(emit_triple(t))
    assert doc.label == t.label and doc.params == t.params
    assert document_triple(doc) == t
    assert emit_document(doc) == emit_triple(t)


def test_report_formats():
    profiles = [invariant_profile(catalog_triple("(5|1)")), invariant_profile(catalog_triple("(9|5|b)", {"b": 1}))]
    rows = list(csv.reader(io.StringIO(emit_report(profiles, "csv"))))
    assert rows[0] == CSV_HEADER
    assert rows[1][:4] == ["(5|1)", "1", "0", "5"]
    data = json.loads(emit_report(profiles, "json"))
    assert data["schema"] == "drinfeld-lab/1"
    assert emit_report(profiles, "json") == emit_report(profiles, "json")
    assert "(5|1)" in emit_report(profiles, "text")
