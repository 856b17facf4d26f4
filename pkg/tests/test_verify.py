from whsl.verify import format_report, reconcile


def test_alpha1_reconciles_exactly(classified):
    report = reconcile(1, entries=classified.get(1))
    assert report.ok
    assert report.missing == []
    assert report.extra == []
    assert all(pub == got for _, pub, got in report.table)


def test_alpha3_extras_are_flagged_not_dropped(classified):
    report = reconcile(3, entries=classified.get(3))
    assert report.ok  # every published case is reproduced
    extra_types = {(e.wt.a, e.wt.b, e.wt.c, e.wt.h) for e in report.extra}
    assert extra_types == {(4, 10, 13, 30)}
    table = {row: (pub, got) for row, pub, got in report.table}
    assert table["Total"] == (34, 36)
    assert any("absent from the published list" in note for note in report.line_notes)


def test_alpha5_line_accounting(classified):
    report = reconcile(5, entries=classified.get(5))
    assert report.ok
    assert len(report.extra) == 9
    assert any("duplicate of 5-C-15" in note for note in report.line_notes)
    assert any("rows sum to 60" in note for note in report.line_notes)
    corrected_notes = [note for note in report.line_notes if note.startswith("5-") and "corrected" in note]
    assert len(corrected_notes) == 7  # 5-B-2, 5-B-4, 5-C-1..5


def test_report_formats(classified):
    report = reconcile(2, entries=classified.get(2))
    text = format_report(report)
    assert "section (i)" in text and "(none)" in text
    data = report.to_json_dict()
    assert data["alpha"] == 2
    assert data["ok"] is True
    assert data["missing"] == []
    assert {row["row"] for row in data["countTable"]} == {
        "g=0, br=3", "g=0, br>=4", "g=1", "g=2", "g=3", "g>=4", "Total",
    }


def test_reconcile_rejects_out_of_range():
    import pytest

    with pytest.raises(ValueError):
        reconcile(7)


def test_reconcile_flags_missing_cases(classified):
    # dropping an entry must surface in section (i) and flip ok to False,
    # which is what drives the CLI's exit code 4
    entries = classified.get(1)
    report = reconcile(1, entries=entries[:-1])
    assert not report.ok
    assert len(report.missing) == 1
    assert report.missing[0].wt == entries[-1].wt
