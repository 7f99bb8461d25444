import json
import subprocess
import sys

import jsonschema
import pytest

from topominor.cli import RESULT_SCHEMA, main
from topominor.embed import rooted_minor
from topominor.finite_tree import enumerate_rooted_trees, to_parens
from topominor.spined import spined_minor

jsonschema.Draft202012Validator.check_schema(RESULT_SCHEMA)
VALIDATOR = jsonschema.Draft202012Validator(RESULT_SCHEMA)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    record = json.loads(out)
    VALIDATOR.validate(record)
    return code, record


def test_minor_examples(capsys):
    code, out, _ = run(capsys, "minor", "(())", "((()))")
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "minor", "((()))", "(())")
    assert (code, out.strip()) == (1, "false")


def test_order_and_equiv(capsys):
    assert run(capsys, "order", "S(w^2)")[1].strip() == "w^2"
    code, out, _ = run(capsys, "equiv", "S(2)", "S(2)")
    assert (code, out.strip()) == (0, "true")


def test_unknown_exit_code(capsys):
    code, record = run_json(capsys, "minor", "spine[attach](vramp)", "spine[attach](ramp: w^2)")
    if record["verdict"] == "unknown":
        assert code == 2


def test_json_record(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, record = run_json(capsys, "minor", "(()())", "((())())", "--out", str(path))
    assert code == 0 and record["command"] == "minor"
    assert record["inputs"] == ["(()())", "((())())"]
    assert record["verdict"] == "true" and record["certificate"]["rule"]
    saved = json.loads(path.read_text())
    assert saved["verdict"] == record["verdict"]


def test_verdicts_match_library(capsys):
    from topominor.dsl import parse_value

    trees = [to_parens(t) for n in range(1, 5) for t in enumerate_rooted_trees(n)]
    for a in trees:
        for b in trees:
            _, record = run_json(capsys, "minor", a, b)
            lib = spined_minor(parse_value(a), parse_value(b))
            assert record["verdict"] == str(lib).lower()
            assert (record["verdict"] == "true") == rooted_minor(parse_value(a).tree, parse_value(b).tree)
    for a, b in [("S(w)", "S(w+1)"), ("hairycomb(3)", "comb(3)"), ("S(3)", "S(2)")]:
        _, record = run_json(capsys, "minor", a, b)
        assert record["verdict"] == str(spined_minor(parse_value(a), parse_value(b))).lower()


def test_sequence_minor(capsys):
    code, record = run_json(capsys, "minor", "seq(prefix: []; cycle: [()])", "seq(prefix: []; cycle: [(())])")
    assert code == 0 and record["verdict"] == "true"
    code, _, err = run(capsys, "minor", "seq(prefix: []; cycle: [()])", "(())")
    assert code == 64 and "usage" in err


def test_error_exit_codes(capsys):
    assert run(capsys, "minor", "(()", "()")[0] == 65
    assert run(capsys, "order", "spine[attach](ramp: w+1)")[0] == 65
    assert run(capsys, "tstar", "--alpha", "x", "S(w)")[0] == 64
    assert run(capsys, "enumerate", "--nodes", "0")[0] == 64
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 64


def test_resource_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("TOPOMINOR_TRUNCATION_CAP", "10")
    assert run(capsys, "truncate", "--spine", "20", "--depth", "3", "S(3)")[0] == 70


def test_classify_and_truncate(capsys):
    code, record = run_json(capsys, "classify", "hairycomb(2)")
    assert record["verdict"] == {"order": "1", "ray_count": 1}
    code, record = run_json(capsys, "truncate", "--spine", "2", "--depth", "1", "S(1)")
    assert record["verdict"] == "(())" and record["certificate"]["size"] == 2


def test_enumerate_and_classes(capsys):
    code, record = run_json(capsys, "enumerate", "--nodes", "4")
    assert len(record["verdict"]) == 4
    code, record = run_json(capsys, "classes", "--max-nodes", "3")
    assert len(record["verdict"]["classes"]) == 4
    assert ["()", "(())"] in record["verdict"]["hasse"]
    assert ["()", "((()))"] not in record["verdict"]["hasse"]


def test_tstar_and_family(capsys):
    code, record = run_json(capsys, "tstar", "--alpha", "3", "hairycomb(3)")
    assert code == 0 and record["verdict"] is not None
    code, record = run_json(capsys, "family", "--size", "4", "S(2)")
    assert code == 0 and len(record["verdict"]) == 4
    assert len(record["certificate"]["pairs"]) == 6


def test_dot_deterministic(capsys):
    first = run(capsys, "dot", "(()())")[1]
    second = run(capsys, "dot", "(()())")[1]
    assert first == second
    assert first.count("->") == 2 and first.startswith("digraph")
    assert run(capsys, "dot", "()")[1].count("->") == 0


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "3")
    assert code == 0 and "[PASS]  3 enumeration" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "topominor", "minor", "(())", "((()))"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "true"
