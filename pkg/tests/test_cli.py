import json
import subprocess
import sys

import pytest

from drinfeld_lab.catalog import catalog_triple
from drinfeld_lab.cli import FAILED, OK, USAGE, run
from drinfeld_lab.specio import emit_triple


def test_catalog_list(capsys):
    assert run(["catalog", "list"]) == OK
    out = capsys.readouterr().out
    assert "Manin triples (44)" in out and "(8|5.ii|b)" in out


def test_catalog_export(tmp_path):
    path = tmp_path / "cat.lalg"
    assert run(["catalog", "export", "--grid", "a=2;b=1", "-o", str(path)]) == OK
    assert path.read_text().count("basis ") == 44


def test_invariants_single(capsys):
    assert run(["invariants", "--triple", "(9|5|b)", "--params", "b=1"]) == OK
    assert "Killing signature: (3,3,0)" in capsys.readouterr().out


def test_invariants_json(capsys):
    assert run(["invariants", "--triple", "(5|1)", "--format", "json"]) == OK
    assert json.loads(capsys.readouterr().out)["schema"] == "drinfeld-lab/1"


def test_verify_iso_stored_and_reverse(capsys):
    assert run(["verify-iso", "--from", "(8|1)", "--to", "(5|2.ii)"]) == OK
    assert run(["verify-iso", "--from", "(8|5.ii|b)", "--to", "(9|5|b)", "--to-params", "b=2"]) == OK
    assert "isomorphism" in capsys.readouterr().out


def test_verify_iso_bad_matrix(tmp_path, capsys):
    m = tmp_path / "m.txt"
    m.write_text("\n".join(" ".join("1" if i == j else "0" for j in range(6)) for i in range(6)))
    assert run(["verify-iso", "--from", "(2|2.i)", "--to", "(2|2.ii)", "--matrix", str(m)]) == FAILED
    assert "NOT an isomorphism" in capsys.readouterr().out
    m.write_text("1 2\n")
    assert run(["verify-iso", "--from", "(5|1)", "--to", "(5|1)", "--matrix", str(m)]) == USAGE


def test_search_iso(capsys):
    assert run(["search-iso", "--from", "(2|2.i)", "--to", "(2|2.ii)"]) == OK
    assert "non-isomorphic" in capsys.readouterr().out


def test_usage_errors():
    assert run([]) == USAGE
    assert run(["invariants", "--triple", "(10|1)"]) == USAGE
    assert run(["invariants", "--triple", "(9|5|b)", "--params", "b=0.5"]) == USAGE
    assert run(["search-iso", "--from", "(5|1)", "--to", "(5|1)", "--budget", "0"]) == USAGE


def test_classify_file(tmp_path, capsys):
    f = tmp_path / "t.lalg"
    f.write_text(emit_triple(catalog_triple("(7_0|2.i)")))
    assert run(["classify", str(f)]) == OK
    out = capsys.readouterr().out
    assert "Manin triple axioms: all hold" in out and "MIA" in out
    g = tmp_path / "b.lalg"
    g.write_text("basis X1 X2 X3;\n[X2,X3] = X1;\n[X3,X1] = X2;\n[X1,X2] = X3;\n")
    assert run(["classify", str(g)]) == OK
    assert "Bianchi type: 9" in capsys.readouterr().out
    h = tmp_path / "bad.lalg"
    h.write_text("basis X1 X2 X3;\n[X1,X2] = X2;\n[X2,X3] = X1;\n")
    assert run(["classify", str(h)]) == FAILED


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "drinfeld_lab", "catalog", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "Bianchi types (11)" in res.stdout


@pytest.mark.slow
def test_verify_theorem_small_grid(capsys):
    assert run(["verify-theorem", "--grid", "a=2,1/2,1;b=1,-1", "--format", "csv"]) == OK
