import json

import pytest
from easydict import EasyDict

from aiearth.repetition.exception import ConfigException, RepetitionException
from aiearth.repetition.job import Table1Cell, Table1Job, render_table
from aiearth.repetition.job.table1_job import DESK_SCALE, EvidenceStep
from aiearth.repetition.utils import list_profiles, load_profile, merge_default_value


def test_profiles():
    assert {"desk", "quick"} <= set(list_profiles())
    cfg = load_profile("desk")
    assert cfg.profile == "desk"
    assert cfg.search.node_budget == 10**9
    assert cfg.search.progress_interval == 10**7
    assert load_profile("quick").search.node_budget < cfg.search.node_budget
    with pytest.raises(ConfigException):
        load_profile("nope")


def test_profile_from_path(tmp_path):
    path = tmp_path / "mine.yaml"
    path.write_text("search:\n  node_budget: 5\n")
    cfg = load_profile(str(path))
    assert cfg.profile == "mine"
    assert cfg.search.node_budget == 5
    # filled from the defaults
    assert cfg.search.progress_interval == 10**7
    assert cfg.word.node_budget == 10**8
    bad = tmp_path / "bad.yaml"
    bad.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigException):
        load_profile(str(bad))


def test_merge_default_value():
    cfg = merge_default_value(EasyDict({"a": {"b": 1}}), {"a.b": 2, "a.c": 3, "d": 4})
    assert cfg.a.b == 1 and cfg.a.c == 3 and cfg.d == 4


def _cell_keys(cells):
    return [(c.row, c.k) for c in cells]


@pytest.mark.parametrize("profile", ["quick", "desk"])
def test_cells_cover_the_table(profile):
    job = Table1Job(profile, invocation="test")
    cells = job.setup()
    keys = _cell_keys(cells)
    assert len(keys) == len(set(keys))
    columns = ["2", "3", "4", "5", "k>=6"]
    for row in ("P", "C", "S", "T", "CP3", "T3", "CP"):
        assert [k for r, k in keys if r == row] == columns
    for row in ("C", "S", "T"):
        assert all(c.status == "out-of-scope" for c in cells if c.row == row)
    assert all(c.plan for c in cells if c.status != "out-of-scope")
    assert job.setup() is cells


def test_profiles_only_change_sizes():
    quick = Table1Job("quick", invocation="test").setup()
    desk = Table1Job("desk", invocation="test").setup()
    assert _cell_keys(quick) == _cell_keys(desk)
    assert [c.status for c in quick] == [c.status for c in desk]


def test_large_k_caterpillar_cell():
    cells = Table1Job("desk", invocation="test").setup()
    cell = next(c for c in cells if c.row == "CP3" and c.k == "k>=6")
    lower = [s.command for s in cell.plan if s.direction == "lower"]
    upper = [s.command for s in cell.plan if s.direction == "upper"]
    assert len(lower) == 2
    assert "--k 6 --exp 4/3 " in lower[0] and "--k 7 --exp 5/4 " in lower[1]
    assert any("--k 7 " in u for u in upper) and any("--k 11 " in u for u in upper)
    assert cell.status == "reproduced"


def test_run_single_cell():
    job = Table1Job("quick", invocation="test")
    cell = next(c for c in job.setup() if c.row == "P" and c.k == "3")
    job.run_cell(cell)
    assert cell.status == "evidence-only"
    assert cell.certified
    assert cell.note.startswith(DESK_SCALE)
    assert cell.evidence[0]["command"].startswith("aie-rt word gen --k 3")


def test_failures_are_isolated():
    def broken():
        raise RepetitionException("boom")

    job = Table1Job("quick", invocation="test")
    cell = Table1Cell("CP3", "2", "3", [
        EvidenceStep("lower", "broken", broken),
        EvidenceStep("upper", "fine", lambda: {"direction": "upper", "kind": "word", "certified": True}),
    ])
    job.run_cell(cell)
    assert cell.status == "incomplete"
    assert cell.errors == ["broken: boom"]
    assert len(cell.evidence) == 1


def test_steps_are_shared():
    calls = []

    def step():
        calls.append(1)
        return {"direction": "upper", "kind": "word", "certified": True}

    job = Table1Job("quick", invocation="test")
    for _ in range(2):
        job.run_cell(Table1Cell("CP", "2", "3", [EvidenceStep("upper", "same", step)]))
    assert len(calls) == 1


def test_report_and_render():
    job = Table1Job("quick", budget=1234, invocation="aie-rt table1")
    job.setup()
    cell = next(c for c in job.cells if c.row == "T3" and c.k == "k>=6")
    job.run_cell(cell)
    report = job.report()
    assert report["budgets"]["search.node_budget"] == 1234
    assert report["invocation"] == "aie-rt table1"
    json.dumps(report)
    text = render_table(report)
    assert "T3" in text and "out-of-scope" in text


@pytest.mark.slow
def test_quick_profile_end_to_end():
    report = Table1Job("quick", invocation="test").run(progress=False)
    statuses = {c["status"] for c in report["cells"]}
    assert statuses <= {"reproduced", "evidence-only", "out-of-scope", "incomplete"}
    for c in report["cells"]:
        if c["status"] == "reproduced":
            assert all(e["certified"] for e in c["evidence"])
            assert DESK_SCALE in c["note"]


def test_run_table1_with_custom_cells(monkeypatch):
    from aiearth.repetition.job import table1_job

    set_cells = table1_job.Table1Job.set_cells

    def only_cp2(self):
        return [c for c in set_cells(self) if c.row == "CP3" and c.k == "2"]

    monkeypatch.setattr(table1_job.Table1Job, "set_cells", only_cp2)
    report = table1_job.run_table1("quick", invocation="test")
    assert [c["row"] for c in report["cells"]] == ["CP3"]
    assert report["cells"][0]["status"] == "reproduced"
