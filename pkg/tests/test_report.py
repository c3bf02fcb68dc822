import json

import numpy as np
import pytest
from rich.console import Console

from kuelshammer.decider import decide_scalar
from kuelshammer.report import Report, assertions_table, dims_table, ledger_table, pgl2_report, render_pgl2


@pytest.fixture(scope="module")
def report9():
    sr = decide_scalar(9)
    return sr, pgl2_report(sr, "pgl2 --q 9")


def test_round_trip():
    r = Report(input={"command": "algebra"}, dims={"center": np.int64(3), "chain": (2, 1, 0)})
    assert r.dims == {"center": 3, "chain": [2, 1, 0]}
    assert Report.from_json(r.to_json()) == r


def test_from_dict_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown"):
        Report.from_dict({"input": {}, "extra": 1})
    with pytest.raises(ValueError, match="input"):
        Report.from_dict({"dims": {}})


def test_ok_needs_every_assertion():
    r = Report(input={}, assertions=[{"name": "a", "passed": True}, {"name": "b", "passed": False}])
    assert not r.ok
    assert Report(input={}).ok


def test_pgl2_report_sections(report9):
    _, report = report9
    doc = json.loads(report.to_json())
    assert set(doc) == {"input", "group", "dims", "blocks", "scalar", "assertions", "timings"}
    assert doc["input"]["q"] == 9
    assert doc["group"]["two_regular"][:2] == ["A1", "A2"]
    assert len(doc["group"]["two_regular"]) == 4
    assert len(doc["group"]["classes"]) == 11
    assert doc["group"]["a3_family_mismatches"] == []
    assert len(doc["blocks"]["rows"]) == 3
    assert report.ok
    assert "total" in doc["timings"]


def test_rendering(report9):
    sr, report = report9
    console = Console(record=True, width=120)
    render_pgl2(console, report, sr.ledger)
    text = console.export_text()
    assert "PGL_2(9)" in text
    assert "c = 1" in text
    console.print(ledger_table(sr.ledger))
    console.print(dims_table(report.dims))
    console.print(assertions_table(report.assertions))
