import json

import pytest

from semiclose import kernel
from semiclose.cli import main
from semiclose.fixtures import S2


@pytest.fixture
def tables(tmp_path):
    kernel.dump(S2, tmp_path / "s2.json")
    (tmp_path / "bad.json").write_text('{"order": 2, "table": [[1, 0], [0, 0]]}')
    (tmp_path / "s2.txt").write_text("2\n0 0\n0 1\n")
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_table(tables, capsys):
    code, out, _ = run(capsys, "analyze", "--table", str(tables / "s2.json"))
    d = json.loads(out)
    assert code == 0 and d["idempotents"] == [0, 1] and d["reflection"]["order"] == 2


def test_analyze_text_format_matches_json(tables, capsys):
    _, a, _ = run(capsys, "analyze", "--table", str(tables / "s2.json"))
    _, b, _ = run(capsys, "analyze", "--table", str(tables / "s2.txt"))
    assert {**json.loads(a), "input": None} == {**json.loads(b), "input": None}


def test_analyze_finite_expression(capsys):
    code, out, _ = run(capsys, "analyze", "--expr", "C(3)")
    d = json.loads(out)
    assert code == 0 and d["exponent"] == 3 and d["viable_idempotents"] == [0]


def test_analyze_infinite_expression(capsys):
    code, out, _ = run(capsys, "analyze", "--expr", "Sum(omega, C(2))")
    d = json.loads(out)
    assert code == 0 and d["predicates"]["bounded"]["exponent"] == 2
    assert d["predicates"]["group_finite"]["value"] == "false"


def test_analyze_bad_table(tables, capsys):
    code, _, err = run(capsys, "analyze", "--table", str(tables / "bad.json"))
    assert code == 2 and "NonAssociative" in err


@pytest.mark.parametrize("argv", [
    ["analyze", "--table", "/no/such/file"],
    ["classify", "--expr", "C(2"],
    ["classify", "--expr", "Prufer(6)"],
    ["quotient", "--expr", "C(2)", "--ideal", "1"],
    ["quotient", "--expr", "OmegaChain", "--ideal", "0"],
    ["verify", "--order", "9"],
    ["enumerate", "--order", "6"],
])
def test_input_errors_exit_2(argv, capsys):
    assert run(capsys, *argv)[0] == 2


def test_classify_outputs(tables, capsys):
    code, out, _ = run(capsys, "classify", "--expr", "Sum(omega, C(2))")
    classes = json.loads(out)["classes"]
    assert code == 0
    assert classes["projectively_closed"]["value"] == "true"
    assert classes["absolutely_T2S_closed"]["value"] == "false"
    _, out, _ = run(capsys, "classify", "--expr", "OmegaChain")
    assert json.loads(out)["classes"]["C_closed"]["value"] == "false"
    _, out, _ = run(capsys, "classify", "--table", str(tables / "s2.json"))
    assert {c["value"] for c in json.loads(out)["classes"].values()} == {"true"}


def test_classify_markdown_to_file(tmp_path, capsys):
    target = tmp_path / "r.md"
    code, out, _ = run(capsys, "classify", "--expr", "NullOmega", "--format", "markdown",
                       "--output", str(target))
    text = target.read_text()
    assert code == 0 and out == ""
    assert "| C_closed | false |" in text and "nonsingular" in text


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--order", "3")
    d = json.loads(out)
    assert code == 0 and d["semigroups"] == 113 and not d["counterexamples"]
    code, out, _ = run(capsys, "verify", "--order", "4", "--commutative", "--format", "markdown")
    assert code == 0 and "| exponent_two_ways |" in out


def test_verify_exit_1_on_counterexample(capsys, monkeypatch):
    from semiclose import oracle

    monkeypatch.setitem(oracle.CHECKS, "planted", lambda S: (False, None))
    assert run(capsys, "verify", "--order", "1")[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "3", "--cumulative")
    assert code == 0 and {k: v["count"] for k, v in json.loads(out).items()} == {"1": 1, "2": 8, "3": 113}
    _, out, _ = run(capsys, "enumerate", "--order", "2", "--up-to-iso", "--dump")
    tables = json.loads(out)["2"]["tables"]
    assert len(tables) == 5
    for t in tables:
        assert kernel.loads(json.dumps({"order": 2, "table": t})).table == tuple(map(tuple, t))


def test_max_order_flag(capsys, monkeypatch):
    # setenv records the prior state, so the value main() writes is undone afterwards
    monkeypatch.setenv("SEMICLOSE_MAX_ORDER", "4")
    code, out, _ = run(capsys, "enumerate", "--order", "5", "--commutative", "--max-order", "5")
    assert code == 0 and json.loads(out)["5"]["count"] > 0


def test_quotient(tables, capsys):
    code, out, _ = run(capsys, "quotient", "--expr", "C(4)", "--pairs", "0:2")
    d = json.loads(out)
    assert code == 0 and d["order"] == 2 and d["projection"] == [0, 1, 0, 1]
    # emitted tables re-ingest unchanged
    assert kernel.loads(out).table == ((0, 1), (1, 0))
    code, out, _ = run(capsys, "quotient", "--table", str(tables / "s2.json"), "--ideal", "0")
    assert code == 0 and json.loads(out)["order"] == 2
