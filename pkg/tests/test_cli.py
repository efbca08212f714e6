import json

import pytest

from granula.cli import main

FIXTURE = ["--n", "4", "--a", "{{1,2},{3,4}}", "--b", "{{1,2,3},{4}}"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_measures_json(capsys):
    code, out, _ = run(capsys, "measures", *FIXTURE, "--kind", "sh2", "--json")
    assert code == 0
    doc = json.loads(out)
    row = doc["measures"][0]
    assert row["G"] == {"fraction": "3/4", "decimal": 0.75}
    assert row["F"]["fraction"] == "1/4"
    assert row["H"]["value"] == pytest.approx(1.5)
    assert row["H'"]["value"] == pytest.approx(0.5)


def test_measures_text_shows_fraction_and_decimal(capsys):
    code, out, _ = run(capsys, "measures", *FIXTURE, "--kind", "sh1")
    assert code == 0 and "7/8 (0.875)" in out


def test_measures_independent(capsys):
    _, out, _ = run(capsys, "measures", "--n", "4", "--a", "{{1,2}}", "--b", "{{3,4}}", "--json")
    doc = json.loads(out)
    assert doc["independent"] and doc["quotient_complement"]
    assert all(r["G"]["fraction"] == "0" and r["F"]["fraction"] == "1/2" for r in doc["measures"])


def test_unknown_element(capsys):
    code, _, err = run(capsys, "measures", "--n", "3", "--a", "{{1,9}}", "--b", "{{1}}")
    assert code == 2 and "unknown element" in err


def test_approx_set(capsys):
    code, out, _ = run(capsys, "approx", "--n", "4", "--attr", "{{1,2},{3,4}}", "--target", "{1,2,3}", "--json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["lower"], doc["upper"]) == ("{1,2}", "{1,2,3,4}")
    assert doc["mode"] == "paper-literal" and doc["shortcut_agreement"] is True


def test_approx_granule_reports_both(capsys):
    _, out, _ = run(capsys, "approx", "--n", "4", "--attr", "{{1},{2},{3,4}}", "--target", "{{1,2},{3,4}}", "--json")
    doc = json.loads(out)
    assert doc["lower"] == doc["upper"] == "{{1,2},{3,4}}"
    assert doc["shortcut"] == {"lower": "{{1},{2},{3,4}}", "upper": "{{1,2},{3,4}}"}
    assert doc["shortcut_agreement"] is False


def test_approx_from_table(tmp_path, capsys):
    table = tmp_path / "t.csv"
    table.write_text("o,c\na,x\nb,x\nc,?\n", encoding="utf-8")
    _, out, _ = run(capsys, "approx", "--table", str(table), "--target", "{a}", "--json")
    doc = json.loads(out)
    assert doc["mode"] == "attribute-generated" and doc["shortcut_agreement"] is None
    assert doc["lower"] == "{}" and doc["upper"] == "{a,b}"


def test_lattice_micro(capsys):
    code, out, _ = run(capsys, "lattice", "--micro", "--n", "2")
    assert code == 0 and out.count("label=") == 4 and out.count("->") == 4


def test_lattice_output_file(tmp_path, capsys):
    target = tmp_path / "m.dot"
    code, _, _ = run(capsys, "lattice", "--macro", "--n", "4", "--attr", "{{1},{2},{3,4}}", "-o", str(target))
    assert code == 0 and target.read_text().count("label=") == 5


def test_lattice_cap(capsys):
    code, _, err = run(capsys, "lattice", "--micro", "--n", "6")
    assert code == 2 and "reduce" in err


def test_ops(capsys):
    _, out, _ = run(capsys, "ops", "quotient-join", "--n", "4", "--a", "{{1,2}}", "--b", "{{2,3},{4}}", "--json")
    assert json.loads(out)["result"] == "{{1,2,3},{4}}"
    _, out, _ = run(capsys, "ops", "meet", "--n", "4", "--a", "{{1,2},{3,4}}", "--b", "{{1},{2,3,4}}", "--json")
    assert json.loads(out)["result"] == "{{1},{2},{3,4}}"
    _, out, _ = run(capsys, "ops", "join", "--n", "3", "--a", "{{1,2}}", "--b", "{{2,3}}", "--json")
    doc = json.loads(out)
    assert doc["is_equivalence"] is False and doc["result"] is None
    _, out, _ = run(capsys, "ops", "compare", "--n", "3", "--a", "{{1},{2},{3}}", "--b", "{{1,2},{3}}")
    assert "strictly_finer_lhs" in out


def test_verify_probe_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--claims", "theorem-7-printed-F", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["reports"][0]["verdict"] == "expected-fail" and doc["reports"][0]["violations"]


def test_verify_exit_status(capsys):
    code, _, _ = run(capsys, "verify", "--n", "3", "--claims", "theorem-4,corollary-1")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--n", "3", "--claims", "theorem-8")
    assert code == 1 and "FAIL" in out


def test_verify_writes_report(tmp_path, capsys):
    target = tmp_path / "r.json"
    run(capsys, "verify", "--n", "2", "--claims", "axiom:A1:", "--json", "-o", str(target))
    doc = json.loads(target.read_text())
    assert {r["claim"] for r in doc["reports"]} >= {"axiom:A1:G:sh1", "axiom:A1:G:sh5"}
