import pytest

from fixture_verification import (
    ALL_TAGS,
    LEDGER_COLUMNS,
    ONE_A,
    REPTYPE,
    S4_CASE1,
    ledger_frame,
    run_fixtures,
)
from parameters import HeckeTypeBError


def test_tags():
    assert ALL_TAGS == ("S4_CASE1", "S4_F0", "S5_CASE1", "S5_CASE2", "REPTYPE", "ONE_A")


def test_reptype_ledger_passes():
    records = run_fixtures(REPTYPE)
    assert [record["check"] for record in records] == ["truth_table", "examples"]
    assert all(record["status"] == "PASS" for record in records)
    assert records[0]["parameters"] == "grid"


@pytest.mark.parametrize("tag", ["S4_F0", "S5_CASE1", "S5_CASE2"])
def test_fixture_groups_pass(tag):
    records = run_fixtures(tag)
    failures = [record for record in records if record["status"] != "PASS"]
    assert failures == []


def test_s4_case1_group_covers_charge_one():
    records = run_fixtures(S4_CASE1)
    assert all(record["status"] == "PASS" for record in records)
    charge_one = [record for record in records if record["parameters"] == "e=5, f=1"]
    assert [record["check"] for record in charge_one] == ["members", "kleshchev", "words"]
    assert {record["parameters"] for record in records} >= {"e=6, f=1", "e=7, f=1", "e=7, f=3"}
    assert sum(record["check"] == "matrix" for record in records) == 5


def test_one_a_group_passes():
    records = run_fixtures(ONE_A)
    assert len(records) == 4
    assert all(record["status"] == "PASS" for record in records)
    assert records[0]["parameters"] == "e=7, f=1"


def test_verbose_progress(capsys):
    run_fixtures(REPTYPE, verbose=True)
    out = capsys.readouterr().out
    assert "Processing 1/2: REPTYPE grid truth_table" in out
    assert "  PASS: " in out


def test_unknown_tag():
    with pytest.raises(HeckeTypeBError):
        run_fixtures("S9")


def test_ledger_frame():
    frame = ledger_frame(run_fixtures(REPTYPE))
    assert list(frame.columns) == LEDGER_COLUMNS
    assert len(frame) == 2
    assert ledger_frame([]).empty
