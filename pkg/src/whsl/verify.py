"""Reconciliation of the enumerator's output against the published case
lists and count table.

A report has three sections: (i) published cases missing from the
enumeration, (ii) enumerated entries absent from the publication, and
(iii) the per-(genus, branch-count) count comparison.  Per-line statuses
(corrections, duplicates) are carried along so every printed line is
accounted for.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumerator import ClassificationEntry, classify
from .fixtures import PaperCase, paper_cases, paper_count_table

__all__ = ["Reconciliation", "reconcile"]


def _row_label(genus: int, branch_count: int) -> str:
    if genus == 0:
        return "g=0, br=3" if branch_count == 3 else "g=0, br>=4"
    if genus >= 4:
        return "g>=4"
    return f"g={genus}"


@dataclass
class Reconciliation:
    alpha: int
    entries: list[ClassificationEntry]
    cases: list[PaperCase]
    missing: list[PaperCase] = field(default_factory=list)
    extra: list[ClassificationEntry] = field(default_factory=list)
    table: list[tuple[str, int, int]] = field(default_factory=list)  # row, published, enumerated
    line_notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Section (i) empty: every published case is reproduced."""
        return not self.missing

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "enumerated": len(self.entries),
            "publishedCases": len(self.cases),
            "missing": [case.case_id for case in self.missing],
            "extra": [entry.to_json_dict() for entry in self.extra],
            "countTable": [
                {"row": row, "published": pub, "enumerated": got}
                for row, pub, got in self.table
            ],
            "lineNotes": self.line_notes,
            "ok": self.ok,
        }


def reconcile(alpha: int, entries: list[ClassificationEntry] | None = None) -> Reconciliation:
    """Compare classify(alpha) with the published cases for 1 <= alpha <= 6."""
    if not (1 <= alpha <= 6):
        raise ValueError(f"published data covers a-invariant 1..6, got {alpha}")
    if entries is None:
        entries = classify(alpha)
    cases = paper_cases(alpha)
    report = Reconciliation(alpha=alpha, entries=entries, cases=cases)

    by_type = {entry.wt: entry for entry in entries}
    matched_types = set()
    for case in cases:
        if case.status == "duplicate":
            report.line_notes.append(
                f"{case.case_id}: duplicate of {case.duplicate_of}, counted once"
            )
            continue
        if case.status == "corrected":
            report.line_notes.append(f"{case.case_id}: corrected ({case.remark})")
        entry = by_type.get(case.wt)
        if entry is None or case.divisor not in entry.divisors:
            report.missing.append(case)
            continue
        matched_types.add(case.wt)
    report.extra = [entry for entry in entries if entry.wt not in matched_types]
    for entry in report.extra:
        report.line_notes.append(
            f"{entry.wt}: enumerated entry absent from the published list"
        )

    published = paper_count_table(alpha)
    got_rows = {row: 0 for row in published}
    for entry in entries:
        got_rows[_row_label(entry.genus, entry.branch_count)] += 1
    got_rows["Total"] = len(entries)
    report.table = [(row, published[row], got_rows[row]) for row in published]
    published_sum = sum(v for row, v in published.items() if row != "Total")
    if published_sum != published["Total"]:
        report.line_notes.append(
            f"published table rows sum to {published_sum}, printed total is "
            f"{published['Total']}"
        )
    return report


def format_report(report: Reconciliation) -> str:
    lines = [f"reconciliation for a(R) = {report.alpha}"]
    lines.append(
        f"  enumerated {len(report.entries)} types; published list has "
        f"{len(report.cases)} case lines"
    )
    lines.append("section (i): published cases missing from enumeration")
    if report.missing:
        for case in report.missing:
            lines.append(f"  {case.case_id}: {case.printed_type}")
    else:
        lines.append("  (none)")
    lines.append("section (ii): enumerated entries absent from the published list")
    if report.extra:
        for entry in report.extra:
            lines.append(
                f"  {entry.wt}  g={entry.genus} pg={entry.p_g} br={entry.branch_count}"
            )
    else:
        lines.append("  (none)")
    lines.append("section (iii): count table (row, published, enumerated)")
    for row, pub, got in report.table:
        marker = "" if pub == got else "   <- differs"
        lines.append(f"  {row:<12} {pub:>4} {got:>4}{marker}")
    if report.line_notes:
        lines.append("notes:")
        for note in report.line_notes:
            lines.append(f"  {note}")
    return "\n".join(lines)
