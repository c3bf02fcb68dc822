import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from kuelshammer.__main__ import app
from kuelshammer.class_algebra import CenterAlgebra
from kuelshammer.group import Group
from kuelshammer.quiver_d2a import d2a_table
from kuelshammer.symalg import group_algebra_table

runner = CliRunner()

GOLDEN = Path(__file__).parent / "fixtures" / "pgl2_q9_golden.json"


def _subset(actual, expected):
    if isinstance(expected, dict):
        return all(k in actual and _subset(actual[k], v) for k, v in expected.items())
    return actual == expected


def test_pgl2_json_matches_golden():
    result = runner.invoke(app, ["pgl2", "--q", "9", "--json"])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert _subset(doc, json.loads(GOLDEN.read_text()))


def test_pgl2_table_output():
    result = runner.invoke(app, ["pgl2", "--q", "9"])
    assert result.exit_code == 0, result.output
    assert "c = 1" in result.output


def test_pgl2_small_defect():
    result = runner.invoke(app, ["pgl2", "--q", "5"])
    assert result.exit_code == 2
    assert "defect too small" in result.output


@pytest.mark.parametrize("q", ["8", "15"])
def test_pgl2_bad_q(q):
    assert runner.invoke(app, ["pgl2", "--q", q]).exit_code == 2


def test_pgl2_bad_depth():
    assert runner.invoke(app, ["pgl2", "--q", "9", "--depth", "0"]).exit_code == 2


def test_algebra_presented(tmp_path):
    path = tmp_path / "d2a_4_1.json"
    d2a_table(4, 1).to_file(path)
    result = runner.invoke(app, ["algebra", "--file", str(path), "--json"])
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout)
    assert doc["dims"]["dim"] == 37
    assert doc["dims"]["jmodj2"] == 2
    assert doc["assertions"][0]["passed"]


def test_algebra_group_table(tmp_path):
    path = tmp_path / "c16.json"
    group_algebra_table(Group("cyclic", 16)).to_file(path)
    result = runner.invoke(app, ["algebra", "--file", str(path), "--json", "--depth", "2"])
    assert result.exit_code == 0, result.output
    dims = json.loads(result.stdout)["dims"]
    assert dims["center"] == 16
    assert dims["t1perp"] == 8
    assert dims["t2perp"] == 4
    assert dims["radical_chain"][0] == dims["j"]


def test_algebra_malformed(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"field": {"p": 2, "m": 1}, "dim": 2}')
    assert runner.invoke(app, ["algebra", "--file", str(path)]).exit_code == 4
    path.write_text("not json")
    assert runner.invoke(app, ["algebra", "--file", str(path)]).exit_code == 4


def test_algebra_invalid_table(tmp_path):
    """Degenerate form: lambda vanishes everywhere."""
    path = tmp_path / "degenerate.json"
    doc = {
        "field": {"p": 2, "m": 1},
        "dim": 1,
        "labels": ["e"],
        "unit": [1],
        "products": [[0, 0, 0, 1]],
        "form_functional": [0],
    }
    path.write_text(json.dumps(doc))
    result = runner.invoke(app, ["algebra", "--file", str(path)])
    assert result.exit_code == 1
    assert "invalid algebra table" in result.output


def test_verify_paper_needs_qmax_9():
    result = runner.invoke(app, ["verify-paper", "--qmax", "8"])
    assert result.exit_code == 2


def test_verify_formulas_alias():
    result = runner.invoke(app, ["verify-formulas", "--qmax", "8"])
    assert result.exit_code == 2
    assert "--qmax must be at least 9" in result.output


@pytest.mark.slow
def test_verify_paper_q9(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    result = runner.invoke(app, ["verify-paper", "--qmax", "9", "--threads", "2", "--json"])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "kuelshammer_logs").is_dir()


def test_internal_check_failure_exits_1(monkeypatch):
    original = CenterAlgebra.verify

    def corrupted(self):
        self.counts = self.counts.copy()
        e = self.identity_class
        self.counts[e, e, e] += 1
        original(self)

    monkeypatch.setattr(CenterAlgebra, "verify", corrupted)
    result = runner.invoke(app, ["pgl2", "--q", "7"])
    assert result.exit_code == 1
    assert "identity class" in result.output
