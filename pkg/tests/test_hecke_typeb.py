import json

import pandas as pd
import pytest

from hecke_typeb import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("argv, expected", [
    (["--n", "4", "--e", "5", "--f", "1"], "FINITE"),
    (["--n", "4", "--e", "4", "--f0", "2"], "INFINITE"),
    (["--n", "6", "--e", "5", "--generic"], "FINITE"),
    (["--n", "6", "--e", "inf", "--f", "1"], "INFINITE"),
])
def test_reptype(capsys, argv, expected):
    code, out, _ = run(capsys, "reptype", *argv)
    assert code == 0
    assert out.strip() == expected


def test_reptype_json(capsys):
    code, out, _ = run(capsys, "reptype", "--n", "6", "--e", "5", "--generic", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 6, "e": "5", "charge": "GENERIC", "rep_type": "FINITE"}


def test_out_of_scope_order(capsys):
    code, out, _ = run(capsys, "reptype", "--n", "3", "--e", "2", "--f", "0")
    assert code == 1
    assert out.startswith("Error: out of scope")


def test_usage_errors(capsys):
    assert run(capsys, "reptype", "--n", "3", "--e", "seven", "--f", "0")[0] == 2
    assert run(capsys, "reptype", "--n", "3", "--e", "5")[0] == 2
    assert run(capsys)[0] == 2


def test_kleshchev(capsys):
    code, out, _ = run(capsys, "kleshchev", "--e", "5", "--f", "1", "1|1")
    assert code == 0
    assert out == "1|1: yes\nwitness: 1@(1,1,2) 0@(1,1,1)\n"
    code, out, _ = run(capsys, "kleshchev", "--e", "5", "--f", "1", "2|", "--json")
    assert json.loads(out)["kleshchev"] is False


def test_bad_literal(capsys):
    code, out, _ = run(capsys, "kleshchev", "--e", "5", "--f", "1", "2,1")
    assert code == 1
    assert out.startswith("Error: ")


def test_blocks_with_csv(capsys, tmp_path):
    output_file = tmp_path / "census.csv"
    code, out, err = run(capsys, "blocks", "--e", "5", "--f", "1", "--n", "2", "--output-file", str(output_file))
    assert code == 0
    assert out.splitlines()[0] == "{0,1} size=3 ONE_A: 2| 1|1 |1,1"
    assert "Saving results to" in err
    census = pd.read_csv(output_file)
    assert list(census["size"]) == [3, 1, 1]


def test_blocks_at_the_case_boundary(capsys):
    code, out, _ = run(capsys, "blocks", "--e", "6", "--f", "2", "--n", "5")
    assert code == 0
    assert any(line.startswith("{0,2,3,4,5} size=6 ONE_A") for line in out.splitlines())


def test_decomp_block_of(capsys):
    code, out, _ = run(capsys, "decomp", "--e", "5", "--f", "0", "--block-of", "1|", "--json")
    assert code == 0
    assert json.loads(out) == {"rows": ["|1", "1|"], "cols": ["|1"], "entries": [[1], [1]]}


def test_decomp_all(capsys):
    code, out, _ = run(capsys, "decomp", "--e", "5", "--f", "1", "--all", "--n", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [entry["size"] for entry in payload] == [3, 1, 1]
    assert payload[0]["matrix"]["entries"] == [[1, 0], [1, 1], [0, 1]]


def test_decomp_all_text_and_verbose(capsys):
    code, out, _ = run(capsys, "decomp", "--e", "5", "--f", "1", "--all", "--n", "2", "--verbose")
    assert code == 0
    assert "Processing 1/3: block {0,1} (3 members)" in out
    assert "block {0,1} size=3 ONE_A CASE1" in out


def test_decomp_out_of_regime(capsys):
    code, out, _ = run(capsys, "decomp", "--e", "5", "--f", "0", "--block-of", "2,2|")
    assert code == 1
    assert out.startswith("Error: decomposition matrices need n < min(e, 2f+4)")


def test_decomp_all_needs_n(capsys):
    code, out, _ = run(capsys, "decomp", "--e", "5", "--f", "1", "--all")
    assert code == 1
    assert "needs --n" in out


def test_fock(capsys):
    code, out, _ = run(capsys, "fock", "--e", "5", "--f", "0", "--word", "F0")
    assert code == 0
    assert out.strip() == "((0),(1)) + v ((1),(0))"
    code, out, _ = run(capsys, "fock", "--e", "5", "--f", "0", "--word", "F0^2", "--json")
    assert json.loads(out) == [{"bipartition": "1|1", "coeff": [[0, 1]]}]


def test_fock_bad_word(capsys):
    code, out, _ = run(capsys, "fock", "--e", "5", "--f", "0", "--word", "X1")
    assert code == 1
    assert out.startswith("Error: malformed word letter")


def test_jantzen(capsys):
    code, out, _ = run(capsys, "jantzen", "--e", "5", "--f", "1", "2|")
    assert code == 0
    assert out.strip() == "[S((1),(1))] - [S((0),(1,1))]"
    code, out, _ = run(capsys, "jantzen", "--e", "3", "--f", "0", "3|")
    assert code == 1


def test_maya(capsys):
    code, out, _ = run(capsys, "maya", "--e", "5", "--f", "1", "1|1")
    assert code == 0
    assert out.splitlines()[0] == "1|1"
    code, out, _ = run(capsys, "maya", "--e", "5", "--f", "1", "1|1", "--json")
    assert json.loads(out)["region_counts"]["aM"] == 1


def test_verify_fixtures(capsys, tmp_path):
    output_file = tmp_path / "ledger.csv"
    code, out, err = run(capsys, "verify-fixtures", "--tag", "REPTYPE", "--output-file", str(output_file))
    assert code == 0
    assert "PASS" in out
    ledger = pd.read_csv(output_file)
    assert list(ledger.columns) == ["tag", "parameters", "check", "status", "detail"]
    assert set(ledger["status"]) == {"PASS"}


def test_verify_fixtures_json(capsys):
    code, out, _ = run(capsys, "verify-fixtures", "--tag", "REPTYPE", "--json")
    assert code == 0
    assert [record["check"] for record in json.loads(out)] == ["truth_table", "examples"]


def test_keyboard_interrupt(capsys, monkeypatch):
    import hecke_typeb

    def interrupted(args):
        raise KeyboardInterrupt

    monkeypatch.setattr(hecke_typeb, "run_fock", interrupted)
    code, out, _ = run(capsys, "fock", "--e", "5", "--word", "F0")
    assert code == 1
    assert "Operation canceled by user." in out
